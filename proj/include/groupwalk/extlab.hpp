#pragma once

#include <functional>
#include <string>
#include <vector>

#include "groupwalk/homomorphism.hpp"
#include "groupwalk/measure.hpp"

namespace groupwalk {

// Upper central series Z^0 = {e} <= Z^1 = Z(G) <= ... of a finite group,
// iterated until stabilization. Each term is returned sorted canonically.
std::vector<std::vector<Element>> central_series(const GroupPtr& g);

// FC-centre of a finite group: every conjugacy class is finite, so this is
// the whole group. Exposed for API uniformity with the series machinery.
std::vector<Element> fc_center(const GroupPtr& g);

// A central extension presented concretely: total group, quotient, the
// quotient map, generators of the normal subgroup N = ker phi, and a section
// picking one lift per quotient element.
struct ExtensionSpec {
  GroupPtr total;
  GroupPtr quotient;
  Homomorphism phi;
  std::vector<Element> normal_generators;
  std::function<Element(const Element&)> section;
  std::string section_name;
};

// Canonical spec for the supported pairs: heisenberg_z / zd(2),
// heisenberg_mod_p(p) / finite_abelian([p,p]), or total == quotient (trivial N).
ExtensionSpec central_extension(GroupPtr total, GroupPtr quotient);

// Breadth-first enumeration of <normal_generators>: identity first, then each
// generation sorted canonically. Deterministic; for finite N and large enough
// `count` this lists all of N.
std::vector<Element> enumerate_normal_subgroup(const ExtensionSpec& spec, int count);

enum class WeightRule {
  geometric,    // f(i) = 2^-(i+1)
  word_damped,  // f(i) = 2^-(i+1) * 2^-|gamma_i| (word length w.r.t. designated generators)
};

struct ExtensionMeasureConfig {
  Rational t = rational(1, 2);   // quotient-step mass; mu_1 carries 1 - t
  int enumeration_count = 9;     // how many elements of N receive mu_1 weight
  WeightRule rule = WeightRule::word_damped;
  bool symmetrize = false;       // average mu_1 with its inversion
  int word_length_cap = 64;
};

// mu = mu_1 + mu_2 with mu_2 = t * (section-lifted nu) and mu_1 supported on N
// with normalized enumeration weights, so phi_* mu = (1-t) delta_e + t nu
// exactly.
RationalProbability build_extension_measure(const ExtensionSpec& spec,
                                            const RationalProbability& nu,
                                            const ExtensionMeasureConfig& config);

// Average of x -> mu over all conjugators of a finite group; the result is
// constant on conjugacy classes and commutes with every measure.
RationalMeasure symmetrize_conjugation(const RationalMeasure& mu);
RationalProbability symmetrize_conjugation(const RationalProbability& mu);

struct EntropyCurve {
  std::vector<long long> steps;      // n = 1, 2, ...
  std::vector<double> entropy_nats;  // H(mu^{*n}) = -sum p log p
  std::vector<double> pruned_mass;   // cumulative pruning loss after step n
  bool capped = false;               // support cap hit; curve is a prefix
};

EntropyCurve entropy_curve(const RealProbability& mu, int n_max, double prune_eps,
                           std::size_t support_cap = 20'000'000);

// rho * P * rho on the lamplighter with rho uniform on {e, lamp at 0} and
// P = delta_shift (drifted) or uniform on both shifts (symmetric).
RationalProbability lamplighter_sws_measure(bool drifted);

// Exact switch-walk-switch entropy on the lamplighter via the walk-with-range
// chain: conditioned on the walk path, lamps over the visited interval are
// i.i.d. fair bits, so the full entropy aggregates over (position, range)
// states without enumerating lamp configurations. No pruning occurs.
EntropyCurve lamplighter_sws_entropy(int n_max, bool drifted);

}  // namespace groupwalk
