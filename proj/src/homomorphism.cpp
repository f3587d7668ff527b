#include "groupwalk/homomorphism.hpp"

#include <nlohmann/json.hpp>

#include "groupwalk/errors.hpp"

namespace groupwalk {

namespace {

long long mod_pos(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

std::vector<long long> abelian_orders(const Group& g) {
  auto j = g.to_json();
  return j["orders"].get<std::vector<long long>>();
}

}  // namespace

Homomorphism Homomorphism::identity_map(GroupPtr g) {
  return Homomorphism(Rule::identity, g, g);
}

Homomorphism Homomorphism::mod_reduction(GroupPtr source, GroupPtr target) {
  if (source->kind() == GroupKind::zd && target->kind() == GroupKind::finite_abelian) {
    if (source->identity().size() != target->identity().size())
      throw PreconditionError("mod_reduction rank mismatch: " + source->name() + " -> " + target->name());
    return Homomorphism(Rule::mod_reduction, std::move(source), std::move(target));
  }
  if (source->kind() == GroupKind::heisenberg_z && target->kind() == GroupKind::heisenberg_mod_p)
    return Homomorphism(Rule::mod_reduction, std::move(source), std::move(target));
  throw PreconditionError("mod_reduction undefined for " + source->name() + " -> " + target->name());
}

Homomorphism Homomorphism::drop_center(GroupPtr source, GroupPtr target) {
  const bool from_z = source->kind() == GroupKind::heisenberg_z && target->kind() == GroupKind::zd &&
                      target->identity().size() == 2;
  bool from_p = false;
  if (source->kind() == GroupKind::heisenberg_mod_p && target->kind() == GroupKind::finite_abelian) {
    auto orders = abelian_orders(*target);
    long long p = source->to_json()["p"].get<long long>();
    from_p = orders == std::vector<long long>{p, p};
  }
  if (!from_z && !from_p)
    throw PreconditionError("drop_center undefined for " + source->name() + " -> " + target->name());
  return Homomorphism(Rule::drop_center, std::move(source), std::move(target));
}

Homomorphism Homomorphism::component(GroupPtr product, std::size_t index) {
  if (product->num_factors() == 0 || index >= product->num_factors())
    throw PreconditionError("component projection needs a direct product and a valid index");
  GroupPtr target = product->factor(index);
  return Homomorphism(Rule::component, std::move(product), std::move(target), index);
}

std::optional<Homomorphism> Homomorphism::infer(GroupPtr source, GroupPtr target) {
  if (same_group(*source, *target)) return identity_map(source);
  try {
    return mod_reduction(source, target);
  } catch (const PreconditionError&) {
  }
  try {
    return drop_center(source, target);
  } catch (const PreconditionError&) {
  }
  for (std::size_t i = 0; i < source->num_factors(); ++i)
    if (same_group(*source->factor(i), *target)) return component(source, i);
  return std::nullopt;
}

Element Homomorphism::apply(const Element& a) const {
  source_->validate(a);
  switch (rule_) {
    case Rule::identity:
      return a;
    case Rule::mod_reduction: {
      if (source_->kind() == GroupKind::zd) {
        auto orders = abelian_orders(*target_);
        Element out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod_pos(a[i], orders[i]);
        return out;
      }
      long long p = target_->to_json()["p"].get<long long>();
      return {mod_pos(a[0], p), mod_pos(a[1], p), mod_pos(a[2], p)};
    }
    case Rule::drop_center: {
      if (target_->kind() == GroupKind::zd) return {a[0], a[1]};
      auto orders = abelian_orders(*target_);
      return {mod_pos(a[0], orders[0]), mod_pos(a[1], orders[1])};
    }
    case Rule::component: {
      std::size_t offset = 0;
      for (std::size_t i = 0; i < index_; ++i) offset += source_->factor(i)->identity().size();
      std::size_t len = target_->identity().size();
      return Element(a.begin() + offset, a.begin() + offset + len);
    }
  }
  throw Error("unreachable homomorphism rule");
}

std::string Homomorphism::describe() const {
  switch (rule_) {
    case Rule::identity: return "identity on " + source_->name();
    case Rule::mod_reduction: return source_->name() + " -> " + target_->name() + " (mod reduction)";
    case Rule::drop_center: return source_->name() + " -> " + target_->name() + " (quotient by center)";
    case Rule::component:
      return source_->name() + " -> " + target_->name() + " (component " + std::to_string(index_) + ")";
  }
  return "?";
}

}  // namespace groupwalk
