#pragma once

#include <cstdint>
#include <random>

#include "groupwalk/group.hpp"
#include "groupwalk/measure.hpp"

namespace groupwalk {

// Deterministic generator for randomized verification suites. A fixed seed
// fully determines every instance drawn from it.
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : eng_(seed) {}

  std::mt19937_64& engine() { return eng_; }

  long long uniform_int(long long lo, long long hi);

  // Uniformly random p/q with 1 <= p < q <= max_den (strictly inside (0,1)).
  Rational rational_in_01(long long max_den = 12);

  const Element& pick(const std::vector<Element>& pool);

  // Random probability measure on a finite group with small rational weights;
  // support size between 1 and max_support.
  RationalProbability random_probability(const GroupPtr& g, int max_support);

  // Random signed measure with integer-over-small-denominator coefficients in
  // [-range, range] (zero coefficients are dropped; may produce few entries).
  RationalMeasure random_signed(const GroupPtr& g, int max_support, int range);

  // Random element whose order is at least min_order (finite groups).
  Element random_element_of_order_at_least(const GroupPtr& g, long long min_order);

 private:
  std::mt19937_64 eng_;
};

}  // namespace groupwalk
