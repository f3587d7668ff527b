#pragma once

#include <vector>

#include "groupwalk/linalg.hpp"
#include "groupwalk/measure.hpp"

namespace groupwalk {

// Right-convolution operator of P on functions over a finite group:
// M[x][y] = P(x^-1 y), acting as f -> f*P on row vectors indexed by `points`.
struct ConvolutionOperator {
  GroupPtr group;
  std::vector<Element> points;  // canonical enumeration
  RationalMatrix matrix;
};

ConvolutionOperator convolution_operator(const RationalProbability& p);

// Exact basis of the space of P-harmonic functions (f*P = f) on a finite
// group, in the canonical reduced-echelon parametrization. Constants are
// always contained; dimension 1 means the pair (group, P) is Liouville.
class HarmonicBasis {
 public:
  HarmonicBasis(GroupPtr group, std::vector<Element> points,
                std::vector<std::vector<Rational>> vectors);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& points() const { return points_; }
  const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }
  std::size_t dimension() const { return vectors_.size(); }
  const RowSpace& span() const { return span_; }

 private:
  GroupPtr group_;
  std::vector<Element> points_;
  std::vector<std::vector<Rational>> vectors_;
  RowSpace span_;
};

HarmonicBasis harmonic_space(const RationalProbability& p);

// Intersection of the harmonic spaces of several measures (stacked kernels).
HarmonicBasis harmonic_space_joint(const std::vector<RationalProbability>& ps);

// Subspace inclusion / equality via exact rank tests. Both bases must live on
// the same group.
bool space_leq(const HarmonicBasis& a, const HarmonicBasis& b);
bool space_eq(const HarmonicBasis& a, const HarmonicBasis& b);

// (f*mu)(x) = sum_s f(x s^-1) mu(s) for a function given in enumeration order.
template <class Coeff>
std::vector<Coeff> convolve_function(const Measure<Coeff>& mu, const std::vector<Element>& points,
                                     const std::vector<Coeff>& f);

// BH_{s eta + t zeta} <= BH_eta `intersect` BH_zeta for commuting factors.
// Refuses (with the witness element in the message) when eta and zeta do not
// commute.
bool commuting_factor_check(const RationalProbability& eta, const RationalProbability& zeta,
                            const Rational& s, const Rational& t);

// nu_t = P * sum_{i=0}^{n-1} [ t (1-t)^i / (1 - (1-t)^n) ] delta_c^i,
// n the order of c.
RationalProbability nu_t_measure(const RationalProbability& p, const Element& c, const Rational& t);

// BH_{mu_t} = BH_{nu_t} with mu_t = t P + (1-t) delta_c.
bool equiv_mu_nu(const RationalProbability& p, const Element& c, const Rational& t);

struct SwsMeasures {
  RationalProbability nu0;       // P * rho, rho uniform on <c>
  RationalProbability averaged;  // (1/2n) sum_i (P + delta_c^-i P delta_c^i), mass normalized
  RationalProbability sandwich;  // rho * P * rho
};

SwsMeasures sws_measures(const RationalProbability& p, const Element& c);

// S_t = (1-t) sum_{i>=0} (tP)^i, computed exactly by solving
// X * (delta_e - tP) = (1-t) delta_e in the group ring. t = 0 gives delta_e.
RationalProbability s_t_measure(const RationalProbability& p, const Rational& t);

struct StEquivalence {
  bool spaces_equal;              // BH_{mu_t} = BH_{delta_c * S_t}
  bool conjugate_product_contained;  // BH_{mu_t} <= BH_{prod_i delta_c^i S_t delta_c^-i}
};

StEquivalence equiv_s_t(const RationalProbability& p, const Element& c, const Rational& t);

// Truncated inverse of the lazy measure P = a delta_e + (1-a) Q, a in (1/2,1):
// P^-1 = (1/a) sum_i ((a-1)/a Q)^i, split into its positive (even i) and
// negative (odd i) parts. `residual_norm` is ||truncated * P - delta_e||_1.
struct LazyInverseParts {
  RationalMeasure positive;
  RationalMeasure negative;  // stored with positive coefficients
  Rational positive_norm;
  Rational negative_norm;
  Rational residual_norm;
};

LazyInverseParts lazy_inverse(const RationalProbability& q, const Rational& a, int truncation);

// f (enumeration order) constant on the right cosets x<gens>?
bool coset_constancy(const GroupPtr& g, const std::vector<Rational>& f,
                     const std::vector<Element>& z_generators);

// f * G_n with G_n the Cesaro average of P; sup norm never increases.
std::vector<double> cesaro_projection(const RealProbability& p, const std::vector<double>& f,
                                      long long n);

}  // namespace groupwalk
