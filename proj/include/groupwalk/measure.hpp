#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groupwalk/errors.hpp"
#include "groupwalk/group.hpp"
#include "groupwalk/homomorphism.hpp"
#include "groupwalk/rational.hpp"

namespace groupwalk {

struct ElementHash {
  std::size_t operator()(const Element& a) const {
    std::uint64_t h = 1469598103934665603ull;
    for (long long v : a) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

template <class Coeff>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static Rational abs(const Rational& c) { return ::abs(c); }
  static double loss(const Rational& c) { return std::abs(c.get_d()); }
  static bool close(const Rational& a, const Rational& b) { return a == b; }
};

template <>
struct CoeffOps<double> {
  static constexpr bool exact = false;
  static constexpr double tolerance = 1e-12;
  static bool is_zero(double c) { return c == 0.0; }
  static double abs(double c) { return std::abs(c); }
  static double loss(double c) { return std::abs(c); }
  static bool close(double a, double b) { return std::abs(a - b) <= tolerance; }
};

// Finitely supported signed measure on a group: a sparse element -> coefficient
// map with no zero entries, kept sorted in canonical element order.
// `prune_loss()` bounds the l1 distance to the value this measure would have
// had without any pruning along the way.
template <class Coeff>
class Measure {
 public:
  using Entry = std::pair<Element, Coeff>;
  using Ops = CoeffOps<Coeff>;

  Measure(GroupPtr group, std::vector<Entry> entries, double prune_loss = 0.0)
      : group_(std::move(group)), prune_loss_(prune_loss) {
    if (!group_) throw PreconditionError("measure needs an owning group");
    for (auto& [x, c] : entries) group_->validate(x);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
      if (!entries_.empty() && entries_.back().first == e.first)
        entries_.back().second += e.second;
      else
        entries_.push_back(std::move(e));
    }
    std::erase_if(entries_, [](const Entry& e) { return Ops::is_zero(e.second); });
  }

  explicit Measure(GroupPtr group) : Measure(std::move(group), {}) {}

  static Measure dirac(GroupPtr group, const Element& x) {
    return Measure(std::move(group), {{x, Coeff(1)}});
  }

  static Measure dirac_identity(GroupPtr group) {
    Element e = group->identity();
    return Measure(std::move(group), {{std::move(e), Coeff(1)}});
  }

  static Measure uniform(GroupPtr group, const std::vector<Element>& support) {
    if (support.empty()) throw PreconditionError("uniform measure needs nonempty support");
    Coeff w = Coeff(1) / Coeff(static_cast<long>(support.size()));
    std::vector<Entry> entries;
    entries.reserve(support.size());
    for (const Element& x : support) entries.push_back({x, w});
    return Measure(std::move(group), std::move(entries));
  }

  const GroupPtr& group() const { return group_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  double prune_loss() const { return prune_loss_; }

  Coeff at(const Element& x) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                               [](const Entry& e, const Element& v) { return e.first < v; });
    if (it != entries_.end() && it->first == x) return it->second;
    return Coeff(0);
  }

  Coeff total_mass() const {
    Coeff s(0);
    for (const auto& [x, c] : entries_) s += c;
    return s;
  }

  Coeff l1_norm() const {
    Coeff s(0);
    for (const auto& [x, c] : entries_) s += Ops::abs(c);
    return s;
  }

  bool is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.second > Coeff(0); });
  }

  // (f*g)(z) = sum over x y = z of f(x) g(y). The smaller support runs on the
  // outside; accumulation order is fixed by the two sorted inputs, so results
  // are bit-for-bit reproducible.
  Measure convolve(const Measure& other) const {
    require_same_group(other);
    std::unordered_map<Element, Coeff, ElementHash> acc;
    acc.reserve(std::min(entries_.size() * other.entries_.size(),
                         std::max(entries_.size(), other.entries_.size()) * 4) +
                8);
    const bool self_outer = entries_.size() <= other.entries_.size();
    const auto& outer = self_outer ? entries_ : other.entries_;
    const auto& inner = self_outer ? other.entries_ : entries_;
    for (const auto& [a, ca] : outer)
      for (const auto& [b, cb] : inner) {
        Element z = self_outer ? group_->mul(a, b) : group_->mul(b, a);
        acc[std::move(z)] += ca * cb;
      }
    double loss = prune_loss_ * (other.l1_double() + other.prune_loss_) +
                  other.prune_loss_ * l1_double();
    return from_accumulator(group_, std::move(acc), loss);
  }

  Measure operator+(const Measure& other) const {
    require_same_group(other);
    std::vector<Entry> entries = entries_;
    entries.insert(entries.end(), other.entries_.begin(), other.entries_.end());
    return Measure(group_, std::move(entries), prune_loss_ + other.prune_loss_);
  }

  Measure operator-(const Measure& other) const { return *this + other.scaled(Coeff(-1)); }

  Measure scaled(const Coeff& c) const {
    std::vector<Entry> entries = entries_;
    for (auto& e : entries) e.second *= c;
    return Measure(group_, std::move(entries), Ops::loss(c) * prune_loss_);
  }

  // The inversion f -> f-check, f(x) -> f(x^-1).
  Measure inverted() const {
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& [x, c] : entries_) entries.push_back({group_->inv(x), c});
    return Measure(group_, std::move(entries), prune_loss_);
  }

  bool is_symmetric() const {
    Measure inv = inverted();
    if (entries_.size() != inv.entries_.size()) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].first != inv.entries_[i].first ||
          !Ops::close(entries_[i].second, inv.entries_[i].second))
        return false;
    return true;
  }

  Measure prune(double eps) const {
    if (eps < 0) throw PreconditionError("prune needs eps >= 0");
    std::vector<Entry> kept;
    kept.reserve(entries_.size());
    double dropped = 0.0;
    for (const auto& e : entries_) {
      if (Ops::loss(e.second) < eps)
        dropped += Ops::loss(e.second);
      else
        kept.push_back(e);
    }
    return Measure(group_, std::move(kept), prune_loss_ + dropped);
  }

  bool operator==(const Measure& other) const {
    return same_group(*group_, *other.group_) && entries_ == other.entries_;
  }

  double l1_double() const {
    double s = 0;
    for (const auto& [x, c] : entries_) s += Ops::loss(c);
    return s;
  }

 private:
  void require_same_group(const Measure& other) const {
    if (group_ == other.group_) return;
    if (!same_group(*group_, *other.group_))
      throw GroupMismatchError("measures live on " + group_->name() + " vs " + other.group_->name());
  }

  static Measure from_accumulator(const GroupPtr& g,
                                  std::unordered_map<Element, Coeff, ElementHash>&& acc,
                                  double loss) {
    std::vector<Entry> entries;
    entries.reserve(acc.size());
    for (auto& [x, c] : acc)
      if (!Ops::is_zero(c)) entries.push_back({x, std::move(c)});
    Measure out(g);
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    out.entries_ = std::move(entries);
    out.prune_loss_ = loss;
    return out;
  }

  GroupPtr group_;
  std::vector<Entry> entries_;
  double prune_loss_ = 0.0;
};

using RationalMeasure = Measure<Rational>;
using RealMeasure = Measure<double>;

// phi_* mu (x) = mu(phi^{-1} x): push mass through a homomorphism, summing
// over fibers.
template <class Coeff>
Measure<Coeff> pushforward(const Homomorphism& phi, const Measure<Coeff>& mu) {
  if (!same_group(*phi.source(), *mu.group()))
    throw GroupMismatchError("pushforward: measure lives on " + mu.group()->name() +
                             ", homomorphism expects " + phi.source()->name());
  std::vector<typename Measure<Coeff>::Entry> entries;
  entries.reserve(mu.entries().size());
  for (const auto& [x, c] : mu.entries()) entries.push_back({phi.apply(x), c});
  return Measure<Coeff>(phi.target(), std::move(entries), mu.prune_loss());
}

// Nonnegative total-mass-one refinement of Measure.
template <class Coeff>
class ProbabilityMeasure {
 public:
  using Ops = CoeffOps<Coeff>;

  explicit ProbabilityMeasure(Measure<Coeff> m) : m_(std::move(m)) {
    if (!m_.is_nonnegative())
      throw PreconditionError("probability measure has a negative coefficient");
    if (!Ops::close(m_.total_mass(), Coeff(1)))
      throw PreconditionError("probability measure mass is not 1");
  }

  static ProbabilityMeasure dirac(GroupPtr g, const Element& x) {
    return ProbabilityMeasure(Measure<Coeff>::dirac(std::move(g), x));
  }
  static ProbabilityMeasure dirac_identity(GroupPtr g) {
    return ProbabilityMeasure(Measure<Coeff>::dirac_identity(std::move(g)));
  }
  static ProbabilityMeasure uniform(GroupPtr g, const std::vector<Element>& support) {
    return ProbabilityMeasure(Measure<Coeff>::uniform(std::move(g), support));
  }

  const Measure<Coeff>& measure() const { return m_; }
  const GroupPtr& group() const { return m_.group(); }

  ProbabilityMeasure convolve(const ProbabilityMeasure& other) const {
    return ProbabilityMeasure(m_.convolve(other.m_));
  }

  // P^{*n}, with P^0 = delta_e.
  ProbabilityMeasure power(long long n) const {
    if (n < 0) throw PreconditionError("power needs n >= 0");
    Measure<Coeff> acc = Measure<Coeff>::dirac_identity(group());
    for (long long i = 0; i < n; ++i) acc = acc.convolve(m_);
    return ProbabilityMeasure(std::move(acc));
  }

  // G_n = (1/(n+1)) sum_{i=0}^{n} P^{*i}; the i = 0 start makes the
  // telescoping identity G_n * (delta_e - P) = (delta_e - P^{n+1})/(n+1) exact.
  ProbabilityMeasure cesaro(long long n) const {
    if (n < 1) throw PreconditionError("cesaro needs n >= 1");
    Measure<Coeff> pow = Measure<Coeff>::dirac_identity(group());
    Measure<Coeff> sum = pow;
    for (long long i = 1; i <= n; ++i) {
      pow = pow.convolve(m_);
      sum = sum + pow;
    }
    return ProbabilityMeasure(sum.scaled(Coeff(1) / Coeff(static_cast<long>(n + 1))));
  }

  // t delta_e + (1-t) P for t in [0,1).
  ProbabilityMeasure lazy(const Coeff& t) const {
    if (t < Coeff(0) || t >= Coeff(1)) throw PreconditionError("lazy needs t in [0,1)");
    Measure<Coeff> out =
        Measure<Coeff>::dirac_identity(group()).scaled(t) + m_.scaled(Coeff(1) - t);
    return ProbabilityMeasure(std::move(out));
  }

  bool is_symmetric() const { return m_.is_symmetric(); }

  bool operator==(const ProbabilityMeasure& other) const { return m_ == other.m_; }

 private:
  Measure<Coeff> m_;
};

using RationalProbability = ProbabilityMeasure<Rational>;
using RealProbability = ProbabilityMeasure<double>;

template <class Coeff>
ProbabilityMeasure<Coeff> pushforward(const Homomorphism& phi, const ProbabilityMeasure<Coeff>& mu) {
  return ProbabilityMeasure<Coeff>(pushforward(phi, mu.measure()));
}

inline RealMeasure to_real(const RationalMeasure& mu) {
  std::vector<RealMeasure::Entry> entries;
  entries.reserve(mu.entries().size());
  for (const auto& [x, c] : mu.entries()) entries.push_back({x, to_double(c)});
  return RealMeasure(mu.group(), std::move(entries), mu.prune_loss());
}

inline RealProbability to_real(const RationalProbability& mu) {
  return RealProbability(to_real(mu.measure()));
}

}  // namespace groupwalk
