#include "groupwalk/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "groupwalk/errors.hpp"

namespace groupwalk {

using nlohmann::json;

std::string kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::finite_abelian: return "finite_abelian";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::heisenberg_mod_p: return "heisenberg_mod_p";
    case GroupKind::zd: return "zd";
    case GroupKind::heisenberg_z: return "heisenberg_z";
    case GroupKind::lamplighter: return "lamplighter";
    case GroupKind::direct_product: return "direct_product";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_element(const Group& g, const std::string& what) {
  throw ElementError("invalid element for " + g.name() + ": " + what);
}

std::string tuple_str(const Element& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "]";
  return os.str();
}

long long mod_pos(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::size_t Group::order() const {
  throw UnsupportedError(name() + " is infinite: no order");
}

std::vector<Element> Group::elements() const {
  throw UnsupportedError(name() + " is infinite: cannot enumerate");
}

GroupPtr Group::factor(std::size_t) const {
  throw UnsupportedError(name() + " is not a direct product");
}

json Group::element_to_json(const Element& a) const {
  validate(a);
  return json(a);
}

Element Group::element_from_json(const json& j) const {
  if (!j.is_array()) throw ElementError("element must be an integer array, got " + j.dump());
  Element a;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ElementError("element coordinates must be integers: " + j.dump());
    a.push_back(v.get<long long>());
  }
  validate(a);
  return a;
}

// ---------------------------------------------------------------------------
// finite_abelian: Z/m1 x ... x Z/mk
// ---------------------------------------------------------------------------

class FiniteAbelian final : public Group {
 public:
  explicit FiniteAbelian(std::vector<long long> orders)
      : Group(GroupKind::finite_abelian, "finite_abelian"), orders_(std::move(orders)) {
    if (orders_.empty()) throw PreconditionError("finite_abelian needs at least one order");
    std::ostringstream os;
    os << "finite_abelian[";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] < 1) throw PreconditionError("finite_abelian orders must be >= 1");
      os << (i ? "," : "") << orders_[i];
    }
    os << "]";
    name_ = os.str();
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (orders_[i] == 1) continue;
      Element e(orders_.size(), 0);
      e[i] = 1;
      gens_.push_back(std::move(e));
    }
  }

  Element identity() const override { return Element(orders_.size(), 0); }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    Element c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = mod_pos(a[i] + b[i], orders_[i]);
    return c;
  }

  Element inv(const Element& a) const override {
    validate(a);
    Element c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = mod_pos(-a[i], orders_[i]);
    return c;
  }

  void validate(const Element& a) const override {
    if (a.size() != orders_.size()) bad_element(*this, tuple_str(a) + " has wrong arity");
    for (std::size_t i = 0; i < orders_.size(); ++i)
      if (a[i] < 0 || a[i] >= orders_[i]) bad_element(*this, tuple_str(a) + " out of range");
  }

  bool finite() const override { return true; }

  std::size_t order() const override {
    std::size_t n = 1;
    for (long long m : orders_) n *= static_cast<std::size_t>(m);
    return n;
  }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    out.reserve(order());
    Element cur(orders_.size(), 0);
    while (true) {
      out.push_back(cur);
      std::size_t i = orders_.size();
      while (i > 0) {
        --i;
        if (++cur[i] < orders_[i]) break;
        cur[i] = 0;
        if (i == 0) return out;
      }
    }
  }

  bool is_central(const Element&) const override { return true; }

  json to_json() const override { return json{{"kind", "finite_abelian"}, {"orders", orders_}}; }

 private:
  std::vector<long long> orders_;
};

// ---------------------------------------------------------------------------
// dihedral: r^i s^j with s r = r^-1 s
// ---------------------------------------------------------------------------

class Dihedral final : public Group {
 public:
  explicit Dihedral(long long n) : Group(GroupKind::dihedral, "dihedral[" + std::to_string(n) + "]"), n_(n) {
    if (n < 1) throw PreconditionError("dihedral needs n >= 1");
    gens_ = {Element{1, 0}, Element{0, 1}};  // r, s
  }

  Element identity() const override { return {0, 0}; }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    // r^i s^j * r^k s^l = r^{i + (-1)^j k} s^{j xor l}
    long long k = a[1] ? -b[0] : b[0];
    return {mod_pos(a[0] + k, n_), a[1] ^ b[1]};
  }

  Element inv(const Element& a) const override {
    validate(a);
    if (a[1]) return a;  // reflections are involutions
    return {mod_pos(-a[0], n_), 0};
  }

  void validate(const Element& a) const override {
    if (a.size() != 2) bad_element(*this, tuple_str(a) + " has wrong arity");
    if (a[0] < 0 || a[0] >= n_ || (a[1] != 0 && a[1] != 1))
      bad_element(*this, tuple_str(a) + " out of range");
  }

  bool finite() const override { return true; }
  std::size_t order() const override { return static_cast<std::size_t>(2 * n_); }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    out.reserve(order());
    for (long long i = 0; i < n_; ++i)
      for (long long j = 0; j < 2; ++j) out.push_back({i, j});
    return out;
  }

  bool is_central(const Element& a) const override {
    for (const Element& g : gens_)
      if (mul(a, g) != mul(g, a)) return false;
    return true;
  }

  json to_json() const override { return json{{"kind", "dihedral"}, {"n", n_}}; }

 private:
  long long n_;
};

// ---------------------------------------------------------------------------
// Heisenberg law shared by the mod-p and integer variants:
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b')
// ---------------------------------------------------------------------------

class HeisenbergModP final : public Group {
 public:
  explicit HeisenbergModP(long long p)
      : Group(GroupKind::heisenberg_mod_p, "heisenberg_mod_p[" + std::to_string(p) + "]"), p_(p) {
    if (p < 2) throw PreconditionError("heisenberg_mod_p needs p >= 2");
    gens_ = {Element{1, 0, 0}, Element{0, 1, 0}};
  }

  Element identity() const override { return {0, 0, 0}; }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    return {mod_pos(a[0] + b[0], p_), mod_pos(a[1] + b[1], p_), mod_pos(a[2] + b[2] + a[0] * b[1], p_)};
  }

  Element inv(const Element& a) const override {
    validate(a);
    return {mod_pos(-a[0], p_), mod_pos(-a[1], p_), mod_pos(a[0] * a[1] - a[2], p_)};
  }

  void validate(const Element& a) const override {
    if (a.size() != 3) bad_element(*this, tuple_str(a) + " has wrong arity");
    for (long long v : a)
      if (v < 0 || v >= p_) bad_element(*this, tuple_str(a) + " out of range");
  }

  bool finite() const override { return true; }
  std::size_t order() const override { return static_cast<std::size_t>(p_ * p_ * p_); }

  std::vector<Element> elements() const override {
    std::vector<Element> out;
    out.reserve(order());
    for (long long a = 0; a < p_; ++a)
      for (long long b = 0; b < p_; ++b)
        for (long long c = 0; c < p_; ++c) out.push_back({a, b, c});
    return out;
  }

  bool is_central(const Element& a) const override { return a[0] == 0 && a[1] == 0; }

  json to_json() const override { return json{{"kind", "heisenberg_mod_p"}, {"p", p_}}; }

 private:
  long long p_;
};

class HeisenbergZ final : public Group {
 public:
  HeisenbergZ() : Group(GroupKind::heisenberg_z, "heisenberg_z") {
    gens_ = {Element{1, 0, 0}, Element{0, 1, 0}};
  }

  Element identity() const override { return {0, 0, 0}; }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
  }

  Element inv(const Element& a) const override {
    validate(a);
    return {-a[0], -a[1], a[0] * a[1] - a[2]};
  }

  void validate(const Element& a) const override {
    if (a.size() != 3) bad_element(*this, tuple_str(a) + " has wrong arity");
  }

  bool finite() const override { return false; }
  bool is_central(const Element& a) const override { return a[0] == 0 && a[1] == 0; }

  json to_json() const override { return json{{"kind", "heisenberg_z"}}; }
};

// ---------------------------------------------------------------------------
// zd: the free abelian group Z^d
// ---------------------------------------------------------------------------

class FreeAbelian final : public Group {
 public:
  explicit FreeAbelian(int d) : Group(GroupKind::zd, "zd[" + std::to_string(d) + "]"), d_(d) {
    if (d < 1) throw PreconditionError("zd needs d >= 1");
    for (int i = 0; i < d; ++i) {
      Element e(d, 0);
      e[i] = 1;
      gens_.push_back(std::move(e));
    }
  }

  Element identity() const override { return Element(d_, 0); }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    Element c(d_);
    for (int i = 0; i < d_; ++i) c[i] = a[i] + b[i];
    return c;
  }

  Element inv(const Element& a) const override {
    validate(a);
    Element c(d_);
    for (int i = 0; i < d_; ++i) c[i] = -a[i];
    return c;
  }

  void validate(const Element& a) const override {
    if (a.size() != static_cast<std::size_t>(d_)) bad_element(*this, tuple_str(a) + " has wrong arity");
  }

  bool finite() const override { return false; }
  bool is_central(const Element&) const override { return true; }

  json to_json() const override { return json{{"kind", "zd"}, {"d", d_}}; }

 private:
  int d_;
};

// ---------------------------------------------------------------------------
// lamplighter: Z/2 wr Z, elements (shift, finite lamp set)
// (m,A)(m',A') = (m+m', A xor (m+A'))
// ---------------------------------------------------------------------------

class Lamplighter final : public Group {
 public:
  Lamplighter() : Group(GroupKind::lamplighter, "lamplighter") {
    gens_ = {Element{1}, Element{0, 0}};  // shift t, lamp at origin
  }

  Element identity() const override { return {0}; }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    std::vector<long long> lamps(a.begin() + 1, a.end());
    for (std::size_t i = 1; i < b.size(); ++i) {
      long long pos = b[i] + a[0];
      auto it = std::lower_bound(lamps.begin(), lamps.end(), pos);
      if (it != lamps.end() && *it == pos)
        lamps.erase(it);
      else
        lamps.insert(it, pos);
    }
    Element c{a[0] + b[0]};
    c.insert(c.end(), lamps.begin(), lamps.end());
    return c;
  }

  Element inv(const Element& a) const override {
    validate(a);
    Element c{-a[0]};
    for (std::size_t i = 1; i < a.size(); ++i) c.push_back(a[i] - a[0]);
    std::sort(c.begin() + 1, c.end());
    return c;
  }

  void validate(const Element& a) const override {
    if (a.empty()) bad_element(*this, "empty tuple");
    for (std::size_t i = 2; i < a.size(); ++i)
      if (a[i - 1] >= a[i]) bad_element(*this, tuple_str(a) + " lamp positions not strictly increasing");
  }

  bool finite() const override { return false; }
  bool is_central(const Element& a) const override { return a == identity(); }

  json to_json() const override { return json{{"kind", "lamplighter"}}; }

  json element_to_json(const Element& a) const override {
    validate(a);
    json lamps = json::array();
    for (std::size_t i = 1; i < a.size(); ++i) lamps.push_back(a[i]);
    return json::array({a[0], lamps});
  }

  Element element_from_json(const json& j) const override {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_array())
      throw ElementError("lamplighter element must be [shift, [lamps...]], got " + j.dump());
    Element a{j[0].get<long long>()};
    for (const auto& v : j[1]) {
      if (!v.is_number_integer()) throw ElementError("lamp positions must be integers: " + j.dump());
      a.push_back(v.get<long long>());
    }
    std::sort(a.begin() + 1, a.end());
    validate(a);
    return a;
  }
};

// ---------------------------------------------------------------------------
// direct_product of fixed-arity groups
// ---------------------------------------------------------------------------

class DirectProduct final : public Group {
 public:
  explicit DirectProduct(std::vector<GroupPtr> factors)
      : Group(GroupKind::direct_product, "direct_product"), factors_(std::move(factors)) {
    if (factors_.size() < 2) throw PreconditionError("direct_product needs at least two factors");
    std::ostringstream os;
    os << "direct_product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i]->kind() == GroupKind::lamplighter || factors_[i]->kind() == GroupKind::direct_product)
        throw UnsupportedError("direct_product factors must be base groups with fixed arity");
      offsets_.push_back(total_);
      total_ += factors_[i]->identity().size();
      os << (i ? " x " : "") << factors_[i]->name();
    }
    os << ")";
    name_ = os.str();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      for (const Element& g : factors_[i]->generators()) gens_.push_back(embed(i, g));
  }

  Element identity() const override {
    Element e;
    for (const auto& f : factors_) {
      Element fi = f->identity();
      e.insert(e.end(), fi.begin(), fi.end());
    }
    return e;
  }

  Element mul(const Element& a, const Element& b) const override {
    validate(a);
    validate(b);
    Element c;
    c.reserve(total_);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Element ci = factors_[i]->mul(part(a, i), part(b, i));
      c.insert(c.end(), ci.begin(), ci.end());
    }
    return c;
  }

  Element inv(const Element& a) const override {
    validate(a);
    Element c;
    c.reserve(total_);
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Element ci = factors_[i]->inv(part(a, i));
      c.insert(c.end(), ci.begin(), ci.end());
    }
    return c;
  }

  void validate(const Element& a) const override {
    if (a.size() != total_) bad_element(*this, tuple_str(a) + " has wrong arity");
    for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->validate(part(a, i));
  }

  bool finite() const override {
    return std::all_of(factors_.begin(), factors_.end(), [](const GroupPtr& f) { return f->finite(); });
  }

  std::size_t order() const override {
    if (!finite()) return Group::order();
    std::size_t n = 1;
    for (const auto& f : factors_) n *= f->order();
    return n;
  }

  std::vector<Element> elements() const override {
    if (!finite()) return Group::elements();
    std::vector<Element> out{Element{}};
    for (const auto& f : factors_) {
      std::vector<Element> next;
      next.reserve(out.size() * f->order());
      for (const Element& head : out)
        for (const Element& tail : f->elements()) {
          Element e = head;
          e.insert(e.end(), tail.begin(), tail.end());
          next.push_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  }

  bool is_central(const Element& a) const override {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->is_central(part(a, i))) return false;
    return true;
  }

  json to_json() const override {
    json factors = json::array();
    for (const auto& f : factors_) factors.push_back(f->to_json());
    return json{{"kind", "direct_product"}, {"factors", factors}};
  }

  std::size_t num_factors() const override { return factors_.size(); }
  GroupPtr factor(std::size_t i) const override { return factors_.at(i); }
  Element part(const Element& a, std::size_t i) const {
    std::size_t len = factors_[i]->identity().size();
    return Element(a.begin() + offsets_[i], a.begin() + offsets_[i] + len);
  }
  Element embed(std::size_t i, const Element& g) const {
    Element e = identity();
    std::copy(g.begin(), g.end(), e.begin() + offsets_[i]);
    return e;
  }

 private:
  std::vector<GroupPtr> factors_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

// ---------------------------------------------------------------------------
// factories and json
// ---------------------------------------------------------------------------

GroupPtr make_finite_abelian(std::vector<long long> orders) {
  return std::make_shared<FiniteAbelian>(std::move(orders));
}
GroupPtr make_dihedral(long long n) { return std::make_shared<Dihedral>(n); }
GroupPtr make_heisenberg_mod_p(long long p) { return std::make_shared<HeisenbergModP>(p); }
GroupPtr make_zd(int d) { return std::make_shared<FreeAbelian>(d); }
GroupPtr make_heisenberg_z() { return std::make_shared<HeisenbergZ>(); }
GroupPtr make_lamplighter() { return std::make_shared<Lamplighter>(); }
GroupPtr make_direct_product(std::vector<GroupPtr> factors) {
  return std::make_shared<DirectProduct>(std::move(factors));
}

GroupPtr group_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw ParseError("group spec must be an object with a \"kind\" string: " + spec.dump());
  const std::string kind = spec["kind"].get<std::string>();
  GroupPtr g;
  try {
    if (kind == "finite_abelian") {
      if (!spec.contains("orders")) throw ParseError("finite_abelian spec needs \"orders\"");
      g = make_finite_abelian(spec["orders"].get<std::vector<long long>>());
    } else if (kind == "dihedral") {
      if (!spec.contains("n")) throw ParseError("dihedral spec needs \"n\"");
      g = make_dihedral(spec["n"].get<long long>());
    } else if (kind == "heisenberg_mod_p") {
      if (!spec.contains("p")) throw ParseError("heisenberg_mod_p spec needs \"p\"");
      g = make_heisenberg_mod_p(spec["p"].get<long long>());
    } else if (kind == "zd") {
      if (!spec.contains("d")) throw ParseError("zd spec needs \"d\"");
      g = make_zd(spec["d"].get<int>());
    } else if (kind == "heisenberg_z") {
      g = make_heisenberg_z();
    } else if (kind == "lamplighter") {
      g = make_lamplighter();
    } else if (kind == "direct_product") {
      if (!spec.contains("factors")) throw ParseError("direct_product spec needs \"factors\"");
      std::vector<GroupPtr> factors;
      for (const auto& f : spec["factors"]) factors.push_back(group_from_json(f));
      g = make_direct_product(std::move(factors));
    } else {
      throw ParseError("unknown group kind \"" + kind + "\"");
    }
  } catch (const json::exception& e) {
    throw ParseError("bad group spec " + spec.dump() + ": " + e.what());
  }
  return g;
}

bool same_group(const Group& a, const Group& b) {
  if (&a == &b) return true;
  return a.to_json() == b.to_json();
}

Element element_power(const Group& g, const Element& a, long long k) {
  Element base = k < 0 ? g.inv(a) : a;
  if (k < 0) k = -k;
  Element acc = g.identity();
  while (k > 0) {
    if (k & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<long long> element_order(const Group& g, const Element& a, long long cap) {
  const Element e = g.identity();
  Element cur = a;
  for (long long k = 1; k <= cap; ++k) {
    if (cur == e) return k;
    cur = g.mul(cur, a);
  }
  return std::nullopt;
}

std::set<Element> subgroup_closure(const Group& g, const std::vector<Element>& gens,
                                   std::size_t size_cap) {
  std::vector<Element> step;
  for (const Element& x : gens) {
    step.push_back(x);
    step.push_back(g.inv(x));
  }
  std::set<Element> seen{g.identity()};
  std::deque<Element> todo{g.identity()};
  while (!todo.empty()) {
    Element cur = std::move(todo.front());
    todo.pop_front();
    for (const Element& s : step) {
      Element nxt = g.mul(cur, s);
      if (seen.insert(nxt).second) {
        if (seen.size() > size_cap)
          throw ResourceError("subgroup closure exceeded cap of " + std::to_string(size_cap));
        todo.push_back(std::move(nxt));
      }
    }
  }
  return seen;
}

std::optional<int> word_length(const Group& g, const Element& a, int radius_cap,
                               std::size_t size_cap) {
  if (g.generators().empty())
    throw PreconditionError(g.name() + " has no designated generating set");
  g.validate(a);
  std::vector<Element> step;
  for (const Element& x : g.generators()) {
    step.push_back(x);
    Element xi = g.inv(x);
    if (std::find(step.begin(), step.end(), xi) == step.end()) step.push_back(std::move(xi));
  }
  const Element e = g.identity();
  if (a == e) return 0;
  std::set<Element> seen{e};
  std::vector<Element> frontier{e};
  for (int d = 1; d <= radius_cap; ++d) {
    std::vector<Element> next;
    for (const Element& cur : frontier)
      for (const Element& s : step) {
        Element nxt = g.mul(cur, s);
        if (nxt == a) return d;
        if (seen.insert(nxt).second) {
          if (seen.size() > size_cap)
            throw ResourceError("word-length search exceeded size cap");
          next.push_back(std::move(nxt));
        }
      }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

std::set<Element> conjugacy_class(const Group& g, const Element& a) {
  g.validate(a);
  if (!g.finite()) {
    if (g.is_central(a)) return {a};
    throw UnsupportedError(g.name() + " is infinite: conjugacy classes only available for central elements");
  }
  std::set<Element> cls;
  for (const Element& x : g.elements()) cls.insert(g.mul(g.mul(x, a), g.inv(x)));
  return cls;
}

}  // namespace groupwalk
