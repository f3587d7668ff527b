#pragma once

#include <optional>
#include <string>

#include "groupwalk/group.hpp"

namespace groupwalk {

// Structure-preserving maps between the concrete group families. Each rule is
// a closed-form coordinate transformation, so phi(ab) = phi(a)phi(b) holds by
// construction; the property tests re-check it on random pairs anyway.
class Homomorphism {
 public:
  enum class Rule {
    identity,        // g -> g
    mod_reduction,   // zd -> finite_abelian (coordinatewise mod), heisenberg_z -> heisenberg_mod_p
    drop_center,     // heisenberg_* -> rank-2 abelian quotient by the center
    component,       // direct_product -> one factor
  };

  static Homomorphism identity_map(GroupPtr g);
  static Homomorphism mod_reduction(GroupPtr source, GroupPtr target);
  static Homomorphism drop_center(GroupPtr source, GroupPtr target);
  static Homomorphism component(GroupPtr product, std::size_t index);

  // Canonical quotient map source -> target when one of the rules applies.
  static std::optional<Homomorphism> infer(GroupPtr source, GroupPtr target);

  Element apply(const Element& a) const;

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  Rule rule() const { return rule_; }
  std::string describe() const;

 private:
  Homomorphism(Rule rule, GroupPtr source, GroupPtr target, std::size_t index = 0)
      : rule_(rule), source_(std::move(source)), target_(std::move(target)), index_(index) {}

  Rule rule_;
  GroupPtr source_;
  GroupPtr target_;
  std::size_t index_ = 0;
};

}  // namespace groupwalk
