#include <nlohmann/json.hpp>
#include <random>
#include <set>

#include "doctest.h"
#include "groupwalk/errors.hpp"
#include "groupwalk/group.hpp"
#include "groupwalk/homomorphism.hpp"

using namespace groupwalk;
using nlohmann::json;

namespace {

Element random_element(const Group& g, std::mt19937_64& rng) {
  switch (g.kind()) {
    case GroupKind::zd:
    case GroupKind::heisenberg_z: {
      std::uniform_int_distribution<long long> coord(-5, 5);
      Element e = g.identity();
      for (auto& v : e) v = coord(rng);
      return e;
    }
    case GroupKind::lamplighter: {
      std::uniform_int_distribution<long long> coord(-4, 4);
      std::uniform_int_distribution<int> count(0, 4);
      std::set<long long> lamps;
      int k = count(rng);
      for (int i = 0; i < k; ++i) lamps.insert(coord(rng));
      Element e{coord(rng)};
      e.insert(e.end(), lamps.begin(), lamps.end());
      return e;
    }
    default: {
      auto all = g.elements();
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      return all[pick(rng)];
    }
  }
}

std::vector<GroupPtr> all_kinds() {
  return {
      make_finite_abelian({2, 3}),
      make_finite_abelian({6}),
      make_dihedral(4),
      make_heisenberg_mod_p(3),
      make_zd(2),
      make_heisenberg_z(),
      make_lamplighter(),
      make_direct_product({make_finite_abelian({4}), make_dihedral(3)}),
  };
}

}  // namespace

TEST_CASE("group multiplication matches the stated conventions") {
  auto z2 = make_zd(2);
  CHECK(z2->mul({1, 0}, {0, 1}) == Element{1, 1});

  auto heis = make_heisenberg_z();
  CHECK(heis->mul({1, 0, 0}, {0, 1, 0}) == Element{1, 1, 1});

  auto d4 = make_dihedral(4);
  Element r{1, 0}, s{0, 1};
  CHECK(d4->mul(s, r) == Element{3, 1});  // s r = r^-1 s = r^3 s
}

TEST_CASE("group inversion") {
  auto z2 = make_zd(2);
  CHECK(z2->inv({3, -1}) == Element{-3, 1});

  auto heis = make_heisenberg_z();
  Element a{1, 1, 1};
  Element ai = heis->inv(a);
  CHECK(heis->mul(a, ai) == heis->identity());
  CHECK(heis->mul(ai, a) == heis->identity());
  CHECK(ai == Element{-1, -1, 0});

  for (const auto& g : all_kinds()) CHECK(g->inv(g->identity()) == g->identity());
}

TEST_CASE("enumeration is complete, canonical and injective") {
  auto za = make_finite_abelian({2});
  CHECK(za->elements() == std::vector<Element>{{0}, {1}});

  CHECK(make_dihedral(3)->elements().size() == 6);

  auto heis3 = make_heisenberg_mod_p(3);
  auto listed = heis3->elements();
  CHECK(listed.size() == 27);
  // brute-force oracle: the coordinate box is the whole group
  std::set<Element> box;
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b)
      for (long long c = 0; c < 3; ++c) box.insert({a, b, c});
  CHECK(std::set<Element>(listed.begin(), listed.end()) == box);

  for (const auto& g : all_kinds()) {
    if (!g->finite()) continue;
    auto all = g->elements();
    CHECK(all.size() == g->order());
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<std::string> serialized;
    for (const auto& e : all) serialized.insert(g->element_to_json(e).dump());
    CHECK(serialized.size() == all.size());
  }

  CHECK_THROWS_AS(make_zd(2)->elements(), UnsupportedError);
}

TEST_CASE("conjugacy classes") {
  auto z6 = make_finite_abelian({6});
  for (const auto& a : z6->elements()) CHECK(conjugacy_class(*z6, a) == std::set<Element>{a});

  auto d4 = make_dihedral(4);
  CHECK(conjugacy_class(*d4, {0, 1}) == std::set<Element>{{0, 1}, {2, 1}});

  auto heis3 = make_heisenberg_mod_p(3);
  CHECK(conjugacy_class(*heis3, {0, 0, 1}) == std::set<Element>{{0, 0, 1}});

  // classes contain their representative and partition the group
  for (GroupPtr g : {make_dihedral(4), make_heisenberg_mod_p(3)}) {
    std::set<Element> covered;
    std::size_t total = 0;
    for (const auto& a : g->elements()) {
      auto cls = conjugacy_class(*g, a);
      CHECK(cls.count(a) == 1);
      if (covered.count(a)) continue;
      for (const auto& x : cls) {
        CHECK(covered.insert(x).second);
      }
      total += cls.size();
    }
    CHECK(total == g->order());
  }

  auto heis = make_heisenberg_z();
  CHECK(conjugacy_class(*heis, {0, 0, 5}) == std::set<Element>{{0, 0, 5}});
  CHECK_THROWS_AS(conjugacy_class(*heis, {1, 0, 0}), UnsupportedError);
}

TEST_CASE("word length via breadth-first search") {
  auto z2 = make_zd(2);
  CHECK(word_length(*z2, {0, 0}, 10) == 0);
  CHECK(word_length(*z2, {2, 1}, 10) == 3);

  auto heis = make_heisenberg_z();
  CHECK(word_length(*heis, {0, 0, 1}, 10) == 4);  // commutator of the two generators

  CHECK(!word_length(*z2, {9, 9}, 3).has_value());  // cap exceeded
}

TEST_CASE("group axioms on random triples") {
  std::mt19937_64 rng(20260810);
  for (const auto& g : all_kinds()) {
    CAPTURE(g->name());
    for (int i = 0; i < 1000; ++i) {
      Element a = random_element(*g, rng);
      Element b = random_element(*g, rng);
      Element c = random_element(*g, rng);
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(g->mul(g->identity(), a) == a);
      CHECK(g->mul(a, g->identity()) == a);
    }
  }
}

TEST_CASE("homomorphism property on random pairs") {
  std::mt19937_64 rng(7);
  struct Case {
    Homomorphism phi;
    GroupPtr src;
  };
  auto z2 = make_zd(2);
  auto heis = make_heisenberg_z();
  auto prod = make_direct_product({make_finite_abelian({4}), make_dihedral(3)});
  std::vector<Case> cases;
  cases.push_back({Homomorphism::mod_reduction(z2, make_finite_abelian({2, 3})), z2});
  cases.push_back({Homomorphism::mod_reduction(heis, make_heisenberg_mod_p(5)), heis});
  cases.push_back({Homomorphism::drop_center(heis, z2), heis});
  cases.push_back({Homomorphism::drop_center(make_heisenberg_mod_p(3), make_finite_abelian({3, 3})),
                   make_heisenberg_mod_p(3)});
  cases.push_back({Homomorphism::component(prod, 1), prod});
  cases.push_back({Homomorphism::identity_map(z2), z2});

  for (auto& [phi, src] : cases) {
    CAPTURE(phi.describe());
    const auto& tgt = *phi.target();
    CHECK(phi.apply(src->identity()) == tgt.identity());
    for (int i = 0; i < 1000; ++i) {
      Element a = random_element(*src, rng);
      Element b = random_element(*src, rng);
      CHECK(phi.apply(src->mul(a, b)) == tgt.mul(phi.apply(a), phi.apply(b)));
    }
  }
}

TEST_CASE("infer finds the canonical quotient maps") {
  CHECK(Homomorphism::infer(make_heisenberg_z(), make_zd(2)).has_value());
  CHECK(Homomorphism::infer(make_heisenberg_mod_p(3), make_finite_abelian({3, 3})).has_value());
  CHECK(Homomorphism::infer(make_zd(1), make_finite_abelian({2})).has_value());
  CHECK(!Homomorphism::infer(make_dihedral(4), make_zd(1)).has_value());
}

TEST_CASE("group json round trip") {
  for (const auto& g : all_kinds()) {
    auto back = group_from_json(g->to_json());
    CHECK(same_group(*g, *back));
  }
  CHECK_THROWS_AS(group_from_json(json{{"kind", "free_group"}}), ParseError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "dihedral"}}), ParseError);
}

TEST_CASE("element json and validation errors") {
  auto d4 = make_dihedral(4);
  CHECK(d4->element_from_json(json::parse("[3,1]")) == Element{3, 1});
  CHECK_THROWS_AS(d4->element_from_json(json::parse("[4,0]")), ElementError);
  CHECK_THROWS_AS(d4->element_from_json(json::parse("[0]")), ElementError);
  CHECK_THROWS_AS(d4->mul({0, 0}, {5, 0}), ElementError);

  auto lamp = make_lamplighter();
  Element e = lamp->element_from_json(json::parse("[2,[0,1]]"));
  CHECK(e == Element{2, 0, 1});
  CHECK(lamp->element_to_json(e).dump() == "[2,[0,1]]");
  CHECK_THROWS_AS(lamp->element_from_json(json::parse("[2]")), ElementError);

  // lamplighter product: walk right, then toggle at the new position
  Element t{1}, l{0, 0};
  CHECK(lamp->mul(t, l) == Element{1, 1});
  CHECK(lamp->mul(l, t) == Element{1, 0});
  CHECK(lamp->inv(lamp->mul(t, l)) == lamp->mul(lamp->inv(l), lamp->inv(t)));
}

TEST_CASE("element order and subgroup closure") {
  auto d4 = make_dihedral(4);
  CHECK(element_order(*d4, {1, 0}, 10) == 4);
  CHECK(element_order(*d4, {0, 1}, 10) == 2);
  CHECK(element_order(*d4, {0, 0}, 10) == 1);

  auto closure = subgroup_closure(*d4, {{0, 1}}, 100);
  CHECK(closure == std::set<Element>{{0, 0}, {0, 1}});

  auto z6 = make_finite_abelian({6});
  CHECK(subgroup_closure(*z6, {{2}}, 100).size() == 3);
  CHECK_THROWS_AS(subgroup_closure(*make_zd(1), {{1}}, 10), ResourceError);
}
