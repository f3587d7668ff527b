#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace groupwalk {

// Elements are flat integer tuples in a kind-specific normal form; the owning
// group interprets them. Lamplighter elements are [shift, lamp positions...]
// with lamp positions strictly increasing. The canonical element order is the
// lexicographic order on these tuples.
using Element = std::vector<long long>;

enum class GroupKind {
  finite_abelian,
  dihedral,
  heisenberg_mod_p,
  zd,
  heisenberg_z,
  lamplighter,
  direct_product,
};

std::string kind_name(GroupKind kind);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  virtual ~Group() = default;

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;

  // Throws ElementError when `a` is not a valid encoding for this group.
  virtual void validate(const Element& a) const = 0;

  virtual bool finite() const = 0;
  // Number of elements; throws UnsupportedError on infinite kinds.
  virtual std::size_t order() const;
  // All elements in canonical order; throws UnsupportedError on infinite kinds.
  virtual std::vector<Element> elements() const;

  // Exact central test derived from the group law (works on infinite kinds).
  virtual bool is_central(const Element& a) const = 0;

  // Designated generating set (possibly empty). Inverses are implied wherever
  // generators are used for metric purposes.
  const std::vector<Element>& generators() const { return gens_; }

  // Direct-product introspection; zero factors for base kinds.
  virtual std::size_t num_factors() const { return 0; }
  virtual GroupPtr factor(std::size_t i) const;

  virtual nlohmann::json to_json() const = 0;
  virtual nlohmann::json element_to_json(const Element& a) const;
  virtual Element element_from_json(const nlohmann::json& j) const;

 protected:
  Group(GroupKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  GroupKind kind_;
  std::string name_;
  std::vector<Element> gens_;
};

GroupPtr make_finite_abelian(std::vector<long long> orders);
GroupPtr make_dihedral(long long n);
GroupPtr make_heisenberg_mod_p(long long p);
GroupPtr make_zd(int d);
GroupPtr make_heisenberg_z();
GroupPtr make_lamplighter();
GroupPtr make_direct_product(std::vector<GroupPtr> factors);

// Builds a group from its JSON spec, e.g. {"kind":"dihedral","n":4}.
// An optional "generators" array overrides the designated generating set.
GroupPtr group_from_json(const nlohmann::json& spec);

// Structural equality (same kind and parameters).
bool same_group(const Group& a, const Group& b);

Element element_power(const Group& g, const Element& a, long long k);

// Smallest k in [1, cap] with a^k = e, or nullopt if none found.
std::optional<long long> element_order(const Group& g, const Element& a, long long cap);

// Subgroup generated by `gens` (closure under products and inverses), capped.
// Throws ResourceError when the closure exceeds `size_cap`.
std::set<Element> subgroup_closure(const Group& g, const std::vector<Element>& gens,
                                   std::size_t size_cap);

// Geodesic word length w.r.t. the designated generators and their inverses;
// nullopt when the breadth-first search exhausts `radius_cap` without hitting
// `a`. Throws PreconditionError when the group has no designated generators.
std::optional<int> word_length(const Group& g, const Element& a, int radius_cap,
                               std::size_t size_cap = 10'000'000);

// { x a x^-1 : x in G } for finite groups; for infinite kinds only central
// elements are supported (their class is a singleton).
std::set<Element> conjugacy_class(const Group& g, const Element& a);

}  // namespace groupwalk
