#include "groupwalk/instances.hpp"

#include <algorithm>

#include "groupwalk/errors.hpp"

namespace groupwalk {

long long InstanceRng::uniform_int(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(eng_);
}

Rational InstanceRng::rational_in_01(long long max_den) {
  long long q = uniform_int(2, max_den);
  long long p = uniform_int(1, q - 1);
  return rational(p, q);
}

const Element& InstanceRng::pick(const std::vector<Element>& pool) {
  if (pool.empty()) throw PreconditionError("pick from empty pool");
  return pool[static_cast<std::size_t>(uniform_int(0, static_cast<long long>(pool.size()) - 1))];
}

RationalProbability InstanceRng::random_probability(const GroupPtr& g, int max_support) {
  auto all = g->elements();
  int k = static_cast<int>(uniform_int(1, std::min<long long>(max_support, all.size())));
  std::vector<RationalMeasure::Entry> entries;
  Rational total(0);
  for (int i = 0; i < k; ++i) {
    Rational w = rational(static_cast<long>(uniform_int(1, 8)));
    entries.push_back({pick(all), w});
    total += w;
  }
  for (auto& e : entries) e.second /= total;
  return RationalProbability(RationalMeasure(g, std::move(entries)));
}

RationalMeasure InstanceRng::random_signed(const GroupPtr& g, int max_support, int range) {
  auto all = g->elements();
  int k = static_cast<int>(uniform_int(1, std::min<long long>(max_support, all.size())));
  std::vector<RationalMeasure::Entry> entries;
  for (int i = 0; i < k; ++i) {
    Rational w = rational(uniform_int(-range, range), uniform_int(1, 4));
    entries.push_back({pick(all), w});
  }
  return RationalMeasure(g, std::move(entries));
}

Element InstanceRng::random_element_of_order_at_least(const GroupPtr& g, long long min_order) {
  auto all = g->elements();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const Element& c = pick(all);
    auto ord = element_order(*g, c, static_cast<long long>(g->order()));
    if (ord && *ord >= min_order) return c;
  }
  throw PreconditionError(g->name() + " has no element of order >= " + std::to_string(min_order));
}

}  // namespace groupwalk
