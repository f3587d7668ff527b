#include "groupwalk/extlab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "groupwalk/errors.hpp"

namespace groupwalk {

std::vector<std::vector<Element>> central_series(const GroupPtr& g) {
  const auto all = g->elements();
  std::set<Element> current{g->identity()};
  std::vector<std::vector<Element>> series{{g->identity()}};
  while (true) {
    // next term: x with [x,y] in current for all y
    std::set<Element> next;
    for (const Element& x : all) {
      bool ok = true;
      for (const Element& y : all) {
        Element comm = g->mul(g->mul(x, y), g->inv(g->mul(y, x)));
        if (!current.count(comm)) {
          ok = false;
          break;
        }
      }
      if (ok) next.insert(x);
    }
    if (next == current) break;
    series.push_back({next.begin(), next.end()});
    current = std::move(next);
  }
  return series;
}

std::vector<Element> fc_center(const GroupPtr& g) {
  if (!g->finite())
    throw UnsupportedError("fc_center is computed on finite groups only");
  return g->elements();
}

ExtensionSpec central_extension(GroupPtr total, GroupPtr quotient) {
  if (same_group(*total, *quotient)) {
    Homomorphism phi = Homomorphism::identity_map(total);
    return {total, quotient, phi, {}, [](const Element& x) { return x; }, "identity"};
  }
  const bool heis_z = total->kind() == GroupKind::heisenberg_z;
  const bool heis_p = total->kind() == GroupKind::heisenberg_mod_p;
  if (heis_z || heis_p) {
    Homomorphism phi = Homomorphism::drop_center(total, quotient);
    std::vector<Element> n_gens{{0, 0, 1}};
    return {total, quotient, phi, n_gens,
            [](const Element& x) { return Element{x[0], x[1], 0}; }, "zero-center lift"};
  }
  throw PreconditionError("no canonical central extension for " + total->name() + " over " +
                          quotient->name());
}

std::vector<Element> enumerate_normal_subgroup(const ExtensionSpec& spec, int count) {
  if (count < 1) throw PreconditionError("enumeration count must be >= 1");
  const Group& g = *spec.total;
  std::vector<Element> step;
  for (const Element& x : spec.normal_generators) {
    step.push_back(x);
    Element xi = g.inv(x);
    if (std::find(step.begin(), step.end(), xi) == step.end()) step.push_back(std::move(xi));
  }
  std::vector<Element> out{g.identity()};
  std::set<Element> seen{g.identity()};
  std::vector<Element> frontier{g.identity()};
  while (static_cast<int>(out.size()) < count && !frontier.empty()) {
    std::set<Element> next;
    for (const Element& cur : frontier)
      for (const Element& s : step) {
        Element nxt = g.mul(cur, s);
        if (!seen.count(nxt)) next.insert(nxt);
      }
    frontier.assign(next.begin(), next.end());
    for (const Element& x : frontier) {
      seen.insert(x);
      out.push_back(x);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

RationalProbability build_extension_measure(const ExtensionSpec& spec,
                                            const RationalProbability& nu,
                                            const ExtensionMeasureConfig& config) {
  if (!same_group(*nu.group(), *spec.quotient))
    throw GroupMismatchError("nu must live on the quotient " + spec.quotient->name());
  if (config.t <= 0 || config.t >= 1)
    throw PreconditionError("build_extension_measure needs t in (0,1)");

  // mu_2: section-lifted nu with mass t
  std::vector<RationalMeasure::Entry> lifted;
  for (const auto& [q, w] : nu.measure().entries()) {
    Element lift = spec.section(q);
    spec.total->validate(lift);
    if (spec.phi.apply(lift) != q)
      throw PreconditionError("section violates phi(lift) = gamma at " +
                              spec.quotient->element_to_json(q).dump());
    lifted.push_back({lift, config.t * w});
  }
  RationalMeasure mu2(spec.total, std::move(lifted));

  // mu_1: normalized enumeration weights on N
  std::vector<Element> enumeration = enumerate_normal_subgroup(spec, config.enumeration_count);
  std::set<Element> listed(enumeration.begin(), enumeration.end());
  for (const Element& gen : spec.normal_generators)
    if (!listed.count(gen))
      throw PreconditionError("enumeration_count too small: a generator of N is not enumerated");

  std::vector<RationalMeasure::Entry> weighted;
  Rational w = rational(1, 2);
  for (const Element& x : enumeration) {
    Rational wx = w;
    if (config.rule == WeightRule::word_damped && !spec.total->generators().empty()) {
      auto len = word_length(*spec.total, x, config.word_length_cap);
      if (!len)
        throw ResourceError("word length of an enumerated element exceeds the cap");
      for (int i = 0; i < *len; ++i) wx /= 2;
    }
    weighted.push_back({x, wx});
    w /= 2;
  }
  RationalMeasure mu0(spec.total, std::move(weighted));
  if (config.symmetrize) mu0 = (mu0 + mu0.inverted()).scaled(rational(1, 2));
  RationalMeasure mu1 = mu0.scaled((1 - config.t) / mu0.l1_norm());

  return RationalProbability(mu1 + mu2);
}

RationalMeasure symmetrize_conjugation(const RationalMeasure& mu) {
  const GroupPtr& g = mu.group();
  const auto all = g->elements();
  const Rational share = rational(1, static_cast<long>(all.size()));
  std::vector<RationalMeasure::Entry> entries;
  entries.reserve(mu.entries().size() * all.size());
  for (const auto& [x, w] : mu.entries())
    for (const Element& conj : all)
      entries.push_back({g->mul(g->mul(conj, x), g->inv(conj)), w * share});
  return RationalMeasure(g, std::move(entries), mu.prune_loss());
}

RationalProbability symmetrize_conjugation(const RationalProbability& mu) {
  return RationalProbability(symmetrize_conjugation(mu.measure()));
}

EntropyCurve entropy_curve(const RealProbability& mu, int n_max, double prune_eps,
                           std::size_t support_cap) {
  if (n_max < 1) throw PreconditionError("entropy_curve needs n_max >= 1");
  if (prune_eps < 0) throw PreconditionError("entropy_curve needs prune_eps >= 0");
  EntropyCurve curve;
  RealMeasure power = mu.measure();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      power = power.convolve(mu.measure());
      if (prune_eps > 0) power = power.prune(prune_eps);
    }
    double h = 0.0;
    for (const auto& [x, p] : power.entries())
      if (p > 0) h -= p * std::log(p);
    curve.steps.push_back(n);
    curve.entropy_nats.push_back(h);
    curve.pruned_mass.push_back(power.prune_loss());
    if (power.support_size() > support_cap) {
      curve.capped = true;
      break;
    }
  }
  return curve;
}

RationalProbability lamplighter_sws_measure(bool drifted) {
  GroupPtr lamp = make_lamplighter();
  RationalMeasure rho =
      (RationalMeasure::dirac_identity(lamp) + RationalMeasure::dirac(lamp, {0, 0}))
          .scaled(rational(1, 2));
  RationalMeasure walk = drifted
                             ? RationalMeasure::dirac(lamp, {1})
                             : (RationalMeasure::dirac(lamp, {1}) +
                                RationalMeasure::dirac(lamp, {-1}))
                                   .scaled(rational(1, 2));
  return RationalProbability(rho.convolve(walk).convolve(rho));
}

EntropyCurve lamplighter_sws_entropy(int n_max, bool drifted) {
  if (n_max < 1) throw PreconditionError("lamplighter_sws_entropy needs n_max >= 1");
  EntropyCurve curve;

  // walk-with-range chain: state (m, a, b), a <= min(0, m), b >= max(0, m)
  struct State {
    int m, a, b;
    bool operator<(const State& o) const {
      return std::tie(m, a, b) < std::tie(o.m, o.a, o.b);
    }
  };
  std::map<State, double> walk{{{0, 0, 0}, 1.0}};

  for (int n = 1; n <= n_max; ++n) {
    std::map<State, double> next;
    for (const auto& [s, p] : walk) {
      for (int dm : {+1, -1}) {
        if (drifted && dm < 0) continue;
        int m2 = s.m + dm;
        State t{m2, std::min(s.a, m2), std::max(s.b, m2)};
        next[t] += drifted ? p : 0.5 * p;
      }
    }
    walk = std::move(next);

    // mu^{*n}(m, A) depends on A only through the hull of A u {0, m}:
    // q(m, alpha, beta) = sum_{a <= alpha, b >= beta} p(m, a, b) 2^-(b-a+1),
    // and 2^free subsets A share each value.
    double h = 0.0;
    std::map<int, std::map<std::pair<int, int>, double>> by_m;
    for (const auto& [s, p] : walk) by_m[s.m][{s.a, s.b}] += p;
    for (const auto& [m, ranges] : by_m) {
      int alo = 0, bhi = 0;
      for (const auto& [ab, p] : ranges) {
        alo = std::min(alo, ab.first);
        bhi = std::max(bhi, ab.second);
      }
      const int ahi = std::min(0, m), blo = std::max(0, m);
      const int na = ahi - alo + 1, nb = bhi - blo + 1;
      std::vector<double> grid(static_cast<std::size_t>(na) * nb, 0.0);
      auto at = [&](int i, int j) -> double& { return grid[static_cast<std::size_t>(i) * nb + j]; };
      for (const auto& [ab, p] : ranges)
        at(ab.first - alo, ab.second - blo) += p * std::ldexp(1.0, -(ab.second - ab.first + 1));
      for (int i = 1; i < na; ++i)
        for (int j = 0; j < nb; ++j) at(i, j) += at(i - 1, j);  // a <= alpha
      for (int j = nb - 2; j >= 0; --j)
        for (int i = 0; i < na; ++i) at(i, j) += at(i, j + 1);  // b >= beta
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
          double q = at(i, j);
          if (q <= 0.0) continue;
          int alpha = alo + i, beta = blo + j;
          int free_sites = (beta - alpha + 1) - (alpha < std::min(0, m) ? 1 : 0) -
                           (beta > std::max(0, m) ? 1 : 0);
          h -= std::ldexp(1.0, free_sites) * q * std::log(q);
        }
    }
    curve.steps.push_back(n);
    curve.entropy_nats.push_back(h);
    curve.pruned_mass.push_back(0.0);
  }
  return curve;
}

}  // namespace groupwalk
