// groupwalk: workbench CLI for convolution algebra, harmonic spaces and
// random-walk experiments on the built-in group families.
//
// Exit codes: 0 all checks passed, 2 counterexample found (witness written
// next to --out), 3 bad input or precondition failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "groupwalk/errors.hpp"
#include "groupwalk/extlab.hpp"
#include "groupwalk/grid.hpp"
#include "groupwalk/harmonic.hpp"
#include "groupwalk/instances.hpp"
#include "groupwalk/io.hpp"

using namespace groupwalk;
using nlohmann::json;

namespace {

struct Output {
  bool quiet = false;
  void line(const std::string& s) const {
    if (!quiet) std::cout << s << "\n";
  }
};

std::vector<long long> parse_n_list(const std::string& csv) {
  std::vector<long long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw ParseError("bad --n list entry \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("--n list is empty");
  return out;
}

GroupPtr load_group(const std::string& path) { return group_from_json(load_json_file(path)); }

RationalProbability load_probability(const std::string& path) {
  return RationalProbability(rational_measure_from_json(load_json_file(path)));
}

Element parse_element(const GroupPtr& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("bad element \"" + text + "\": " + e.what());
  }
  return g->element_from_json(j);
}

std::string witness_path(const std::string& out_base, const std::string& tag) {
  if (out_base.empty()) return tag + ".witness.json";
  return out_base + "." + tag + ".witness.json";
}

// First basis vector of `a` outside the span of `b`, as a serialized function.
json span_witness(const HarmonicBasis& a, const RowSpace& b) {
  for (const auto& v : a.vectors())
    if (!b.contains(v)) {
      json values = json::array();
      for (const Rational& c : v) values.push_back(rational_to_string(c));
      return values;
    }
  return json();
}

int run_decay(const std::string& n_csv, double f_exp, const std::string& mode_name,
              const std::string& out, const Output& log) {
  GridMode mode;
  if (mode_name == "exact")
    mode = GridMode::exact;
  else if (mode_name == "real")
    mode = GridMode::real;
  else
    throw ParseError("--mode must be exact or real");
  auto report = run_decay_experiment(parse_n_list(n_csv), f_exp, mode);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.ns.size(); ++i)
    rows.push_back({std::to_string(report.ns[i]), format_double(report.decay_norms[i]),
                    format_double(report.coarse_bounds[i]), format_double(report.refined_bounds[i]),
                    format_double(report.cumulative_runtime_ms[i])});
  if (!out.empty())
    write_csv(out, {"n", "decay_norm", "coarse_bound", "refined_bound", "cumulative_runtime_ms"},
              rows);

  std::ostringstream os;
  os << "PASS decay: " << report.ns.size() << " sample points";
  if (report.has_fit)
    os << ", fitted exponent " << format_double(report.fit.exponent) << " (residual "
       << format_double(report.fit.residual) << ")";
  if (!out.empty()) os << " -> " << out;
  log.line(os.str());
  return 0;
}

int run_harmonic(const std::string& group_path, const std::string& measure_path,
                 const std::string& out, const Output& log) {
  auto g = load_group(group_path);
  auto p = load_probability(measure_path);
  if (!same_group(*g, *p.group()))
    throw GroupMismatchError("--measure lives on a different group than --group");
  auto basis = harmonic_space(p);
  if (!out.empty()) save_json_file(out, basis_to_json(basis));
  std::ostringstream os;
  os << "PASS harmonic: dimension " << basis.dimension()
     << (basis.dimension() == 1 ? " (Liouville)" : "");
  if (!out.empty()) os << " -> " << out;
  log.line(os.str());
  return 0;
}

GroupPtr suite_group(InstanceRng& rng) {
  switch (rng.uniform_int(0, 2)) {
    case 0: return make_finite_abelian({rng.uniform_int(2, 12)});
    case 1: return make_dihedral(4);
    default: return make_heisenberg_mod_p(3);
  }
}

int run_equiv_instance(const std::string& transform, const RationalProbability& p,
                       const Element& c, const Rational& t, const std::string& out,
                       const Output& log) {
  const GroupPtr& g = p.group();
  if (transform == "nu_t") {
    RationalProbability mu_t(p.measure().scaled(t) + RationalMeasure::dirac(g, c).scaled(1 - t));
    auto mu_basis = harmonic_space(mu_t);
    auto nu_basis = harmonic_space(nu_t_measure(p, c, t));
    if (!out.empty()) {
      save_json_file(out + ".mu_basis.json", basis_to_json(mu_basis));
      save_json_file(out + ".nu_basis.json", basis_to_json(nu_basis));
    }
    if (space_eq(mu_basis, nu_basis)) {
      log.line("PASS equiv nu_t: BH_mu = BH_nu (dimension " +
               std::to_string(mu_basis.dimension()) + ")");
      return 0;
    }
    json witness = span_witness(mu_basis, nu_basis.span());
    if (witness.is_null()) witness = span_witness(nu_basis, mu_basis.span());
    std::string path = witness_path(out, "nu_t");
    save_json_file(path, witness);
    log.line("FAIL equiv nu_t: spaces differ, witness -> " + path);
    return 2;
  }
  if (transform == "s_t") {
    auto result = equiv_s_t(p, c, t);
    if (result.spaces_equal && result.conjugate_product_contained) {
      log.line("PASS equiv s_t: BH_mu = BH_{delta_c * S_t} and conjugate-product containment");
      return 0;
    }
    log.line(std::string("FAIL equiv s_t: ") +
             (result.spaces_equal ? "conjugate-product containment" : "space equality"));
    return 2;
  }
  if (transform == "sws") {
    auto sws = sws_measures(p, c);
    long long n = *element_order(*g, c, g->order());
    std::vector<RationalMeasure::Entry> entries;
    Element cur = g->identity();
    for (long long i = 0; i < n; ++i) {
      entries.push_back({cur, rational(1, n)});
      cur = g->mul(cur, c);
    }
    RationalProbability rho{RationalMeasure(g, std::move(entries))};
    auto nu = nu_t_measure(p, c, t);
    if (!(nu.convolve(rho) == p.convolve(rho))) {
      RationalMeasure diff = nu.convolve(rho).measure() - p.convolve(rho).measure();
      std::string path = witness_path(out, "sws_identity");
      save_json_file(path, measure_to_json(diff));
      log.line("FAIL equiv sws: nu_t * rho != P * rho, difference -> " + path);
      return 2;
    }
    auto joint = harmonic_space_joint({sws.nu0, RationalProbability::dirac(g, c)});
    auto sandwich = harmonic_space(sws.sandwich);
    if (!space_leq(joint, sandwich)) {
      std::string path = witness_path(out, "sws_containment");
      save_json_file(path, span_witness(joint, sandwich.span()));
      log.line("FAIL equiv sws: containment fails, witness -> " + path);
      return 2;
    }
    log.line("PASS equiv sws: nu_t * rho = P * rho and kernel containment");
    return 0;
  }
  throw ParseError("--transform must be nu_t, s_t or sws");
}

int run_equiv_suite(const std::string& transform, int count, std::uint64_t seed,
                    const std::string& out, const Output& log) {
  InstanceRng rng(seed);
  for (int i = 0; i < count; ++i) {
    GroupPtr g = suite_group(rng);
    auto p = rng.random_probability(g, 4);
    Element c = rng.random_element_of_order_at_least(g, 2);
    Rational t = rng.rational_in_01();
    Output instance_log{true};
    int rc = run_equiv_instance(transform, p, c, t, out, instance_log);
    if (rc != 0) {
      log.line("FAIL equiv suite: instance " + std::to_string(i) + " of " + std::to_string(count));
      return rc;
    }
  }
  log.line("PASS equiv suite: " + std::to_string(count) + " randomized " + transform +
           " instances");
  return 0;
}

int run_commute_check(const std::string& group_path, const std::string& eta_path,
                      const std::string& zeta_path, const std::string& s_text,
                      const std::string& t_text, int suite, std::uint64_t seed,
                      const std::string& out, const Output& log) {
  if (suite > 0) {
    InstanceRng rng(seed);
    for (int i = 0; i < suite; ++i) {
      GroupPtr g = suite_group(rng);
      auto eta = rng.random_probability(g, 4);
      auto zeta = symmetrize_conjugation(rng.random_probability(g, 4));
      Rational s = rng.rational_in_01();
      if (!commuting_factor_check(eta, zeta, s, 1 - s)) {
        log.line("FAIL commute-check suite: instance " + std::to_string(i));
        return 2;
      }
    }
    log.line("PASS commute-check suite: " + std::to_string(suite) + " randomized instances");
    return 0;
  }
  auto g = load_group(group_path);
  auto eta = load_probability(eta_path);
  auto zeta = load_probability(zeta_path);
  if (!same_group(*g, *eta.group()) || !same_group(*g, *zeta.group()))
    throw GroupMismatchError("measures must live on --group");
  Rational s = parse_rational(s_text), t = parse_rational(t_text);
  if (commuting_factor_check(eta, zeta, s, t)) {
    log.line("PASS commute-check: BH_{s.eta + t.zeta} inside BH_eta and BH_zeta");
    return 0;
  }
  RationalProbability mu(eta.measure().scaled(s) + zeta.measure().scaled(t));
  auto mixed = harmonic_space(mu);
  json witness = span_witness(mixed, harmonic_space(eta).span());
  if (witness.is_null()) witness = span_witness(mixed, harmonic_space(zeta).span());
  std::string path = witness_path(out, "commute");
  save_json_file(path, witness);
  log.line("FAIL commute-check: witness function -> " + path);
  return 2;
}

int run_build_mu(const std::string& total_path, const std::string& quotient_path,
                 const std::string& nu_path, const std::string& t_text, int enum_count,
                 const std::string& weights, bool symmetrize, const std::string& out,
                 const Output& log) {
  auto total = load_group(total_path);
  auto quotient = load_group(quotient_path);
  auto nu = load_probability(nu_path);
  auto spec = central_extension(total, quotient);

  ExtensionMeasureConfig config;
  config.t = parse_rational(t_text);
  config.enumeration_count = enum_count;
  config.symmetrize = symmetrize;
  if (weights == "geometric")
    config.rule = WeightRule::geometric;
  else if (weights == "word-damped")
    config.rule = WeightRule::word_damped;
  else
    throw ParseError("--weights must be geometric or word-damped");

  auto mu = build_extension_measure(spec, nu, config);
  if (!out.empty()) save_json_file(out, measure_to_json(mu.measure()));

  // report the pushforward identity the construction guarantees
  auto pushed = pushforward(spec.phi, mu);
  auto expected = RationalMeasure::dirac_identity(quotient).scaled(1 - config.t) +
                  nu.measure().scaled(config.t);
  bool exact = pushed.measure() == expected;
  std::ostringstream os;
  os << (exact ? "PASS" : "FAIL") << " build-mu: support " << mu.measure().support_size()
     << ", phi_* mu " << (exact ? "=" : "!=") << " (1-t) delta_e + t nu";
  if (!out.empty()) os << " -> " << out;
  log.line(os.str());
  return exact ? 0 : 2;
}

int run_entropy(const std::string& group_path, const std::string& measure_path,
                const std::string& sws_variant, int steps, double prune_eps,
                const std::string& method, const std::string& out, const Output& log) {
  GroupPtr g = load_group(group_path);
  std::optional<RealProbability> mu;
  std::optional<bool> sws_drifted;

  if (!sws_variant.empty()) {
    if (g->kind() != GroupKind::lamplighter)
      throw PreconditionError("--sws needs the lamplighter group");
    if (sws_variant != "drifted" && sws_variant != "symmetric")
      throw ParseError("--sws must be drifted or symmetric");
    sws_drifted = sws_variant == "drifted";
    mu = to_real(lamplighter_sws_measure(*sws_drifted));
  } else {
    if (measure_path.empty()) throw ParseError("entropy needs --measure or --sws");
    AnyMeasure any = measure_from_json(load_json_file(measure_path));
    RealMeasure m = std::holds_alternative<RealMeasure>(any)
                        ? std::get<RealMeasure>(any)
                        : to_real(std::get<RationalMeasure>(any));
    if (!same_group(*g, *m.group()))
      throw GroupMismatchError("--measure lives on a different group than --group");
    mu = RealProbability(std::move(m));
    if (g->kind() == GroupKind::lamplighter)
      for (bool d : {false, true})
        if (mu->measure() == to_real(lamplighter_sws_measure(d)).measure()) sws_drifted = d;
  }

  bool use_exact = false;
  if (method == "auto")
    use_exact = sws_drifted.has_value();
  else if (method == "sws-exact") {
    if (!sws_drifted)
      throw PreconditionError("sws-exact method needs the canonical switch-walk-switch measure");
    use_exact = true;
  } else if (method != "generic") {
    throw ParseError("--method must be auto, generic or sws-exact");
  }

  EntropyCurve curve = use_exact ? lamplighter_sws_entropy(steps, *sws_drifted)
                                 : entropy_curve(*mu, steps, prune_eps);

  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < curve.steps.size(); ++i)
    rows.push_back({std::to_string(curve.steps[i]), format_double(curve.entropy_nats[i]),
                    format_double(curve.pruned_mass[i])});
  if (!out.empty()) write_csv(out, {"n", "entropy_nats", "pruned_mass"}, rows);

  std::ostringstream os;
  os << "PASS entropy: " << curve.steps.size() << " steps ("
     << (use_exact ? "switch-walk-switch aggregation" : "sparse convolution") << ")";
  if (curve.capped) os << " [support cap hit, partial curve]";
  if (!out.empty()) os << " -> " << out;
  log.line(os.str());
  return 0;
}

int run_series(const std::string& group_path, const std::string& out, const Output& log) {
  auto g = load_group(group_path);
  auto series = central_series(g);
  json terms = json::array();
  for (const auto& term : series) {
    json elems = json::array();
    for (const Element& x : term) elems.push_back(g->element_to_json(x));
    terms.push_back(std::move(elems));
  }
  json fc = json::array();
  for (const Element& x : fc_center(g)) fc.push_back(g->element_to_json(x));
  json doc{{"group", g->to_json()}, {"series", std::move(terms)}, {"fc_center", std::move(fc)}};
  if (!out.empty()) save_json_file(out, doc);
  std::ostringstream os;
  os << "PASS series: " << series.size() << " terms, sizes";
  for (const auto& term : series) os << " " << term.size();
  if (!out.empty()) os << " -> " << out;
  log.line(os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groupwalk: convolution algebra and harmonic-space workbench"};
  app.require_subcommand(1);

  Output log;
  std::string out;
  std::uint64_t seed = 1;
  app.add_flag("--quiet", log.quiet, "suppress non-error output");

  auto* decay = app.add_subcommand("decay", "decay-norm experiment on the commuting model");
  std::string decay_ns = "500,1000,2000,5000", decay_mode = "real";
  double f_exp = 0.25;
  decay->add_option("--n", decay_ns, "comma-separated sample points");
  decay->add_option("--f-exp", f_exp, "exponent of f(n) = n^x in the bounds");
  decay->add_option("--mode", decay_mode, "exact or real");
  decay->add_option("--out", out, "CSV report path");

  auto* harmonic = app.add_subcommand("harmonic", "exact harmonic-space basis on a finite group");
  std::string group_path, measure_path;
  harmonic->add_option("--group", group_path, "group spec JSON")->required();
  harmonic->add_option("--measure", measure_path, "rational probability measure JSON")->required();
  harmonic->add_option("--out", out, "basis JSON path");

  auto* equiv = app.add_subcommand("equiv", "harmonicity equivalences for transformed measures");
  std::string transform, c_text, t_text = "1/2";
  int suite = 0;
  equiv->add_option("--transform", transform, "nu_t, s_t or sws")->required();
  equiv->add_option("--group", group_path, "group spec JSON");
  equiv->add_option("--measure", measure_path, "rational probability measure JSON");
  equiv->add_option("--c", c_text, "element as a JSON array");
  equiv->add_option("--t", t_text, "rational t in (0,1)");
  equiv->add_option("--suite", suite, "run N randomized instances instead");
  equiv->add_option("--seed", seed, "suite seed");
  equiv->add_option("--out", out, "artifact path prefix");

  auto* commute = app.add_subcommand("commute-check", "commuting-factor harmonicity check");
  std::string eta_path, zeta_path, s_text = "1/2";
  commute->add_option("--group", group_path, "group spec JSON");
  commute->add_option("--eta", eta_path, "first factor measure JSON");
  commute->add_option("--zeta", zeta_path, "second factor measure JSON");
  commute->add_option("--s", s_text, "weight of eta");
  commute->add_option("--t", t_text, "weight of zeta");
  commute->add_option("--suite", suite, "run N randomized instances instead");
  commute->add_option("--seed", seed, "suite seed");
  commute->add_option("--out", out, "artifact path prefix");

  auto* build_mu = app.add_subcommand("build-mu", "extension measure for a central quotient");
  std::string quotient_path, nu_path, weights = "word-damped";
  int enum_count = 9;
  bool symmetrize = false;
  build_mu->add_option("--group", group_path, "total group spec JSON")->required();
  build_mu->add_option("--quotient", quotient_path, "quotient group spec JSON")->required();
  build_mu->add_option("--nu", nu_path, "measure JSON on the quotient")->required();
  build_mu->add_option("--t", t_text, "quotient-step mass t in (0,1)");
  build_mu->add_option("--enum-count", enum_count, "how many elements of N get weight");
  build_mu->add_option("--weights", weights, "geometric or word-damped");
  build_mu->add_flag("--symmetrize", symmetrize, "make the N-part inversion invariant");
  build_mu->add_option("--out", out, "measure JSON path");

  auto* entropy = app.add_subcommand("entropy", "Avez entropy along convolution powers");
  std::string sws_variant, method = "auto";
  int steps = 25;
  double prune_eps = 1e-15;
  entropy->add_option("--group", group_path, "group spec JSON")->required();
  entropy->add_option("--measure", measure_path, "probability measure JSON");
  entropy->add_option("--sws", sws_variant, "canonical lamplighter measure: drifted or symmetric");
  entropy->add_option("--steps", steps, "number of convolution powers");
  entropy->add_option("--prune", prune_eps, "pruning threshold per step");
  entropy->add_option("--method", method, "auto, generic or sws-exact");
  entropy->add_option("--out", out, "CSV path (n, entropy_nats, pruned_mass)");

  auto* series = app.add_subcommand("series", "upper central series of a finite group");
  series->add_option("--group", group_path, "group spec JSON")->required();
  series->add_option("--out", out, "series JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (decay->parsed()) return run_decay(decay_ns, f_exp, decay_mode, out, log);
    if (harmonic->parsed()) return run_harmonic(group_path, measure_path, out, log);
    if (equiv->parsed()) {
      if (suite > 0) return run_equiv_suite(transform, suite, seed, out, log);
      if (group_path.empty() || measure_path.empty() || c_text.empty())
        throw ParseError("equiv needs --group, --measure and --c (or --suite N)");
      auto g = load_group(group_path);
      auto p = load_probability(measure_path);
      if (!same_group(*g, *p.group()))
        throw GroupMismatchError("--measure lives on a different group than --group");
      return run_equiv_instance(transform, p, parse_element(g, c_text), parse_rational(t_text),
                                out, log);
    }
    if (commute->parsed())
      return run_commute_check(group_path, eta_path, zeta_path, s_text, t_text, suite, seed, out,
                               log);
    if (build_mu->parsed())
      return run_build_mu(group_path, quotient_path, nu_path, t_text, enum_count, weights,
                          symmetrize, out, log);
    if (entropy->parsed())
      return run_entropy(group_path, measure_path, sws_variant, steps, prune_eps, method, out,
                         log);
    if (series->parsed()) return run_series(group_path, out, log);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
