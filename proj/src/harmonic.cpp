#include "groupwalk/harmonic.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "groupwalk/errors.hpp"

namespace groupwalk {

namespace {

std::size_t index_of(const std::vector<Element>& points, const Element& x) {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x) throw ElementError("element not in enumeration");
  return static_cast<std::size_t>(it - points.begin());
}

long long finite_order_of(const GroupPtr& g, const Element& c) {
  long long cap = g->finite() ? static_cast<long long>(g->order()) : 1024;
  auto ord = element_order(*g, c, cap);
  if (!ord) throw PreconditionError("element has unknown or infinite order");
  return *ord;
}

// Constraint matrix of f*P = f: rows indexed by points x, columns by y, entry
// [x == y] - P(y^-1 x). Its kernel is the harmonic space.
RationalMatrix harmonic_constraints(const RationalProbability& p,
                                    const std::vector<Element>& points) {
  const GroupPtr& g = p.group();
  const std::size_t n = points.size();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a.at(i, i) += 1;
    for (const auto& [s, w] : p.measure().entries()) {
      std::size_t j = index_of(points, g->mul(points[i], g->inv(s)));
      a.at(i, j) -= w;
    }
  }
  return a;
}

RationalProbability uniform_on_powers(const GroupPtr& g, const Element& c, long long n) {
  std::vector<RationalMeasure::Entry> entries;
  Element cur = g->identity();
  for (long long i = 0; i < n; ++i) {
    entries.push_back({cur, rational(1, n)});
    cur = g->mul(cur, c);
  }
  return RationalProbability(RationalMeasure(g, std::move(entries)));
}

}  // namespace

ConvolutionOperator convolution_operator(const RationalProbability& p) {
  const GroupPtr& g = p.group();
  std::vector<Element> points = g->elements();
  const std::size_t n = points.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [s, w] : p.measure().entries())
      m.at(i, index_of(points, g->mul(points[i], s))) += w;  // M[x][xs] = P(s)
  return {g, std::move(points), std::move(m)};
}

HarmonicBasis::HarmonicBasis(GroupPtr group, std::vector<Element> points,
                             std::vector<std::vector<Rational>> vectors)
    : group_(std::move(group)),
      points_(std::move(points)),
      vectors_(std::move(vectors)),
      span_(vectors_) {}

HarmonicBasis harmonic_space(const RationalProbability& p) {
  std::vector<Element> points = p.group()->elements();
  RationalMatrix a = harmonic_constraints(p, points);
  return HarmonicBasis(p.group(), std::move(points), kernel_basis(std::move(a)));
}

HarmonicBasis harmonic_space_joint(const std::vector<RationalProbability>& ps) {
  if (ps.empty()) throw PreconditionError("harmonic_space_joint needs at least one measure");
  const GroupPtr& g = ps.front().group();
  std::vector<Element> points = g->elements();
  const std::size_t n = points.size();
  RationalMatrix stacked(n * ps.size(), n);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (!same_group(*ps[k].group(), *g))
      throw GroupMismatchError("harmonic_space_joint measures live on different groups");
    RationalMatrix a = harmonic_constraints(ps[k], points);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked.at(k * n + i, j) = a.at(i, j);
  }
  return HarmonicBasis(g, std::move(points), kernel_basis(std::move(stacked)));
}

bool space_leq(const HarmonicBasis& a, const HarmonicBasis& b) {
  if (!same_group(*a.group(), *b.group()))
    throw GroupMismatchError("harmonic bases live on different groups");
  if (a.dimension() > b.dimension()) return false;
  return b.span().contains_all(a.vectors());
}

bool space_eq(const HarmonicBasis& a, const HarmonicBasis& b) {
  return a.dimension() == b.dimension() && space_leq(a, b) && space_leq(b, a);
}

template <class Coeff>
std::vector<Coeff> convolve_function(const Measure<Coeff>& mu, const std::vector<Element>& points,
                                     const std::vector<Coeff>& f) {
  if (f.size() != points.size())
    throw PreconditionError("function and enumeration sizes differ");
  const GroupPtr& g = mu.group();
  std::vector<Coeff> out(f.size(), Coeff(0));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const auto& [s, w] : mu.entries())
      out[i] += f[index_of(points, g->mul(points[i], g->inv(s)))] * w;
  return out;
}

template std::vector<Rational> convolve_function(const RationalMeasure&,
                                                 const std::vector<Element>&,
                                                 const std::vector<Rational>&);
template std::vector<double> convolve_function(const RealMeasure&, const std::vector<Element>&,
                                               const std::vector<double>&);

bool commuting_factor_check(const RationalProbability& eta, const RationalProbability& zeta,
                            const Rational& s, const Rational& t) {
  if (s <= 0 || t <= 0 || s + t != 1)
    throw PreconditionError("commuting_factor_check needs s,t > 0 with s + t = 1");
  RationalMeasure commutator =
      eta.measure().convolve(zeta.measure()) - zeta.measure().convolve(eta.measure());
  if (commutator.support_size() != 0) {
    const Element& witness = commutator.entries().front().first;
    throw PreconditionError("factors do not commute; witness element " +
                            eta.group()->element_to_json(witness).dump());
  }
  RationalProbability mu(eta.measure().scaled(s) + zeta.measure().scaled(t));
  HarmonicBasis mixed = harmonic_space(mu);
  return space_leq(mixed, harmonic_space(eta)) && space_leq(mixed, harmonic_space(zeta));
}

RationalProbability nu_t_measure(const RationalProbability& p, const Element& c,
                                 const Rational& t) {
  if (t <= 0 || t >= 1) throw PreconditionError("nu_t needs t in (0,1)");
  const GroupPtr& g = p.group();
  long long n = finite_order_of(g, c);
  Rational one_minus_t = 1 - t;
  Rational denom = 1;
  Rational power = 1;
  for (long long i = 0; i < n; ++i) power *= one_minus_t;
  denom -= power;  // 1 - (1-t)^n

  std::vector<RationalMeasure::Entry> entries;
  Element cur = g->identity();
  Rational coeff = t / denom;
  for (long long i = 0; i < n; ++i) {
    entries.push_back({cur, coeff});
    cur = g->mul(cur, c);
    coeff *= one_minus_t;
  }
  RationalProbability geometric{RationalMeasure(g, std::move(entries))};
  return p.convolve(geometric);
}

bool equiv_mu_nu(const RationalProbability& p, const Element& c, const Rational& t) {
  RationalProbability mu_t(p.measure().scaled(t) +
                           RationalMeasure::dirac(p.group(), c).scaled(1 - t));
  return space_eq(harmonic_space(mu_t), harmonic_space(nu_t_measure(p, c, t)));
}

SwsMeasures sws_measures(const RationalProbability& p, const Element& c) {
  const GroupPtr& g = p.group();
  long long n = finite_order_of(g, c);
  RationalProbability rho = uniform_on_powers(g, c, n);
  RationalProbability nu0 = p.convolve(rho);

  // The displayed average (1/n) sum_i (P + delta_c^-i P delta_c^i) carries
  // total mass 2; it is renormalized by 2 here.
  RationalMeasure acc(g);
  Element cpow = g->identity();
  for (long long i = 0; i < n; ++i) {
    RationalMeasure conjugated = RationalMeasure::dirac(g, g->inv(cpow))
                                     .convolve(p.measure())
                                     .convolve(RationalMeasure::dirac(g, cpow));
    acc = acc + p.measure() + conjugated;
    cpow = g->mul(cpow, c);
  }
  RationalProbability averaged(acc.scaled(rational(1, 2 * n)));

  RationalProbability sandwich = rho.convolve(p).convolve(rho);
  return {std::move(nu0), std::move(averaged), std::move(sandwich)};
}

RationalProbability s_t_measure(const RationalProbability& p, const Rational& t) {
  if (t < 0 || t >= 1) throw PreconditionError("s_t_measure needs t in [0,1)");
  const GroupPtr& g = p.group();
  std::vector<Element> points = g->elements();
  const std::size_t n = points.size();
  // X * (delta_e - tP) = (1-t) delta_e; right convolution by m is the matrix
  // R[x][y] = m(x^-1 y) acting on row vectors, so solve R^T X^T = rhs.
  RationalMatrix rt(n, n);
  const std::size_t e_index = index_of(points, g->identity());
  for (std::size_t i = 0; i < n; ++i) {
    rt.at(i, i) += 1;
    for (const auto& [s, w] : p.measure().entries())
      rt.at(index_of(points, g->mul(points[i], s)), i) -= t * w;
  }
  std::vector<Rational> rhs(n, Rational(0));
  rhs[e_index] = 1 - t;
  std::vector<Rational> x = solve_linear(std::move(rt), std::move(rhs));
  std::vector<RationalMeasure::Entry> entries;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) entries.push_back({points[i], x[i]});
  return RationalProbability(RationalMeasure(g, std::move(entries)));
}

StEquivalence equiv_s_t(const RationalProbability& p, const Element& c, const Rational& t) {
  if (t <= 0 || t >= 1) throw PreconditionError("equiv_s_t needs t in (0,1)");
  const GroupPtr& g = p.group();
  long long n = finite_order_of(g, c);
  RationalProbability st = s_t_measure(p, t);
  RationalProbability mu_t(p.measure().scaled(t) + RationalMeasure::dirac(g, c).scaled(1 - t));
  RationalProbability cst(RationalMeasure::dirac(g, c).convolve(st.measure()));

  HarmonicBasis mu_space = harmonic_space(mu_t);
  StEquivalence out{};
  out.spaces_equal = space_eq(mu_space, harmonic_space(cst));

  RationalMeasure product = RationalMeasure::dirac_identity(g);
  for (long long i = 1; i <= n; ++i) {
    Element ci = element_power(*g, c, i);
    product = product.convolve(RationalMeasure::dirac(g, ci))
                  .convolve(st.measure())
                  .convolve(RationalMeasure::dirac(g, g->inv(ci)));
  }
  out.conjugate_product_contained =
      space_leq(mu_space, harmonic_space(RationalProbability(std::move(product))));
  return out;
}

LazyInverseParts lazy_inverse(const RationalProbability& q, const Rational& a, int truncation) {
  if (a <= rational(1, 2) || a >= 1)
    throw PreconditionError("lazy_inverse needs a in (1/2, 1)");
  if (truncation < 0) throw PreconditionError("lazy_inverse needs truncation >= 0");
  const GroupPtr& g = q.group();
  const Rational ratio = (1 - a) / a;  // |r| with r = (a-1)/a

  RationalMeasure positive(g), negative(g);
  RationalMeasure qpow = RationalMeasure::dirac_identity(g);
  Rational coeff = 1 / a;
  for (int i = 0; i <= truncation; ++i) {
    if (i > 0) {
      qpow = qpow.convolve(q.measure());
      coeff *= ratio;
    }
    if (i % 2 == 0)
      positive = positive + qpow.scaled(coeff);
    else
      negative = negative + qpow.scaled(coeff);
  }
  RationalProbability p = q.lazy(a);
  RationalMeasure residual = (positive - negative).convolve(p.measure()) -
                             RationalMeasure::dirac_identity(g);
  return {positive, negative, positive.l1_norm(), negative.l1_norm(), residual.l1_norm()};
}

bool coset_constancy(const GroupPtr& g, const std::vector<Rational>& f,
                     const std::vector<Element>& z_generators) {
  std::vector<Element> points = g->elements();
  if (f.size() != points.size())
    throw PreconditionError("coset_constancy needs a function on the whole enumeration");
  for (const Element& z : z_generators) g->validate(z);
  std::set<Element> closure = subgroup_closure(*g, z_generators, g->order());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (const Element& z : closure)
      if (f[index_of(points, g->mul(points[i], z))] != f[i]) return false;
  return true;
}

std::vector<double> cesaro_projection(const RealProbability& p, const std::vector<double>& f,
                                      long long n) {
  std::vector<Element> points = p.group()->elements();
  if (f.size() != points.size())
    throw PreconditionError("cesaro_projection needs a function on the whole enumeration");
  RealProbability gn = p.cesaro(n);
  return convolve_function(gn.measure(), points, f);
}

}  // namespace groupwalk
