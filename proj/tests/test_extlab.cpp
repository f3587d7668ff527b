#include <cmath>

#include "doctest.h"
#include "groupwalk/errors.hpp"
#include "groupwalk/extlab.hpp"
#include "groupwalk/instances.hpp"

using namespace groupwalk;

namespace {

bool is_normal(const Group& g, const std::vector<Element>& subgroup) {
  std::set<Element> sub(subgroup.begin(), subgroup.end());
  for (const Element& x : g.elements())
    for (const Element& n : subgroup)
      if (!sub.count(g.mul(g.mul(x, n), g.inv(x)))) return false;
  return true;
}

double binomial_walk_entropy(int n) {
  // H of uniform{-1,+1}^{*n} on Z: atoms C(n,k)/2^n
  std::vector<double> binom{1.0};
  for (int row = 1; row <= n; ++row) {
    std::vector<double> next(row + 1, 0.0);
    for (int k = 0; k <= row; ++k) {
      if (k > 0) next[k] += binom[k - 1];
      if (k < row) next[k] += binom[k];
    }
    binom = std::move(next);
  }
  double h = 0.0;
  for (double b : binom) {
    double p = std::ldexp(b, -n);
    h -= p * std::log(p);
  }
  return h;
}

}  // namespace

TEST_CASE("central series") {
  auto z6 = make_finite_abelian({6});
  auto series = central_series(z6);
  REQUIRE(series.size() == 2);
  CHECK(series[0] == std::vector<Element>{{0}});
  CHECK(series[1].size() == 6);

  auto heis3 = make_heisenberg_mod_p(3);
  auto hs = central_series(heis3);
  REQUIRE(hs.size() == 3);
  CHECK(hs[1] == std::vector<Element>{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}});
  CHECK(hs[2].size() == 27);

  auto d4 = make_dihedral(4);
  auto ds = central_series(d4);
  REQUIRE(ds.size() == 3);
  CHECK(ds[1] == std::vector<Element>{{0, 0}, {2, 0}});
  CHECK(ds[2].size() == 8);

  for (const auto& g : {z6, heis3, d4}) {
    auto chain = central_series(g);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      CHECK(chain[i].size() < chain[i + 1].size());
    for (const auto& term : chain) CHECK(is_normal(*g, term));
  }

  CHECK(fc_center(d4).size() == 8);
}

TEST_CASE("normal subgroup enumeration") {
  auto spec = central_extension(make_heisenberg_z(), make_zd(2));
  auto five = enumerate_normal_subgroup(spec, 5);
  CHECK(five == std::vector<Element>{{0, 0, 0}, {0, 0, -1}, {0, 0, 1}, {0, 0, -2}, {0, 0, 2}});

  auto finite_spec = central_extension(make_heisenberg_mod_p(3), make_finite_abelian({3, 3}));
  auto all = enumerate_normal_subgroup(finite_spec, 100);
  CHECK(all.size() == 3);  // the whole center of H(Z/3)
}

TEST_CASE("extension measure with trivial N is a lazy lift") {
  auto z6 = make_finite_abelian({6});
  auto spec = central_extension(z6, z6);
  auto nu = RationalProbability::uniform(z6, {{1}, {5}});
  ExtensionMeasureConfig config;
  config.t = rational(1, 3);
  config.enumeration_count = 1;
  auto mu = build_extension_measure(spec, nu, config);
  CHECK(mu == nu.lazy(rational(2, 3)));  // (1-t) delta_e + t nu
}

TEST_CASE("extension measure on the Heisenberg group over Z^2") {
  auto heis = make_heisenberg_z();
  auto z2 = make_zd(2);
  auto spec = central_extension(heis, z2);
  auto nu = RationalProbability::uniform(z2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});

  ExtensionMeasureConfig config;  // t = 1/2, word-damped, 9 center elements
  auto mu = build_extension_measure(spec, nu, config);

  CHECK(mu.measure().total_mass() == 1);
  auto pushed = pushforward(spec.phi, mu);
  auto expected = RationalMeasure::dirac_identity(z2).scaled(rational(1, 2)) +
                  nu.measure().scaled(rational(1, 2));
  CHECK(pushed.measure() == expected);

  // symmetric when nu is symmetric, the section respects inverses on supp nu,
  // and the N-weights are symmetrized
  config.symmetrize = true;
  auto sym = build_extension_measure(spec, nu, config);
  CHECK(sym.is_symmetric());
  auto sym_pushed = pushforward(spec.phi, sym);
  CHECK(sym_pushed.measure() == expected);

  ExtensionMeasureConfig tiny;
  tiny.enumeration_count = 1;
  CHECK_THROWS_AS(build_extension_measure(spec, nu, tiny), PreconditionError);
}

TEST_CASE("extension measure support generates N on the finite instance") {
  auto heis3 = make_heisenberg_mod_p(3);
  auto q33 = make_finite_abelian({3, 3});
  auto spec = central_extension(heis3, q33);
  auto nu = RationalProbability::uniform(q33, {{1, 0}, {2, 0}, {0, 1}, {0, 2}});
  ExtensionMeasureConfig config;
  config.enumeration_count = 3;
  auto mu = build_extension_measure(spec, nu, config);

  std::vector<Element> in_n;
  for (const auto& [x, w] : mu.measure().entries())
    if (spec.phi.apply(x) == q33->identity()) in_n.push_back(x);
  auto generated = subgroup_closure(*heis3, in_n, 27);

  auto series = central_series(heis3);
  std::set<Element> center(series[1].begin(), series[1].end());  // N cap Z^1 = center here
  CHECK(generated == center);
}

TEST_CASE("conjugation symmetrization") {
  auto d4 = make_dihedral(4);
  auto heis3 = make_heisenberg_mod_p(3);

  // central support is untouched
  auto central = RationalMeasure::dirac(d4, {2, 0});
  CHECK(symmetrize_conjugation(central) == central);

  // delta_s spreads over the conjugacy class {s, r^2 s}
  auto spread = symmetrize_conjugation(RationalMeasure::dirac(d4, {0, 1}));
  CHECK(spread == RationalMeasure::uniform(d4, {{0, 1}, {2, 1}}));

  // output is constant on conjugacy classes
  InstanceRng rng(21);
  for (GroupPtr g : {d4, heis3}) {
    for (int i = 0; i < 50; ++i) {
      auto mu1 = symmetrize_conjugation(rng.random_probability(g, 4));
      for (const auto& [x, w] : mu1.measure().entries())
        for (const Element& y : conjugacy_class(*g, x)) CHECK(mu1.measure().at(y) == w);
      // and commutes with everything as a convolution
      auto mu2 = rng.random_probability(g, 4);
      CHECK(mu1.measure().convolve(mu2.measure()) == mu2.measure().convolve(mu1.measure()));
    }
  }
}

TEST_CASE("entropy of a point mass is zero") {
  auto z4 = make_finite_abelian({4});
  auto curve = entropy_curve(RealProbability::dirac_identity(z4), 10, 0.0);
  for (double h : curve.entropy_nats) CHECK(h == 0.0);
  CHECK(!curve.capped);
}

TEST_CASE("entropy of the simple walk on Z matches binomial entropy") {
  auto z = make_zd(1);
  auto coin = RealProbability::uniform(z, {{-1}, {1}});
  auto curve = entropy_curve(coin, 20, 0.0);
  for (int n = 1; n <= 20; ++n)
    CHECK(curve.entropy_nats[n - 1] == doctest::Approx(binomial_walk_entropy(n)).epsilon(1e-10));
  // increments tail off
  CHECK(curve.entropy_nats[19] - curve.entropy_nats[18] <
        curve.entropy_nats[1] - curve.entropy_nats[0]);
}

TEST_CASE("entropy on finite groups is bounded by log |G| and stabilizes") {
  auto z4 = make_finite_abelian({4});
  auto mu = RealProbability::uniform(z4, {{0}, {1}});
  auto curve = entropy_curve(mu, 60, 0.0);
  for (double h : curve.entropy_nats) CHECK(h <= std::log(4.0) + 1e-12);
  CHECK(std::abs(curve.entropy_nats[59] - curve.entropy_nats[58]) < 1e-8);
}

TEST_CASE("entropy support cap yields a flagged partial curve") {
  auto lamp = make_lamplighter();
  auto mu = to_real(lamplighter_sws_measure(false));
  auto curve = entropy_curve(mu, 30, 0.0, 500);
  CHECK(curve.capped);
  CHECK(curve.steps.size() < 30);
}

TEST_CASE("pruning is reported in the curve") {
  auto z = make_zd(1);
  auto skew = RealProbability(RealMeasure(z, {{{-1}, 0.5 - 1e-13}, {{1}, 0.5 - 1e-13}, {{5}, 2e-13}}));
  auto curve = entropy_curve(skew, 8, 1e-10);
  CHECK(curve.pruned_mass.back() > 0.0);
  CHECK(curve.pruned_mass.back() < 1e-6);
  CHECK(std::is_sorted(curve.pruned_mass.begin(), curve.pruned_mass.end()));
}

TEST_CASE("lamplighter switch-walk-switch: aggregated equals generic") {
  for (bool drifted : {false, true}) {
    CAPTURE(drifted);
    auto mu = to_real(lamplighter_sws_measure(drifted));
    auto generic = entropy_curve(mu, 9, 0.0);
    auto exact = lamplighter_sws_entropy(9, drifted);
    REQUIRE(generic.steps.size() == 9);
    for (int n = 0; n < 9; ++n)
      CHECK(generic.entropy_nats[n] == doctest::Approx(exact.entropy_nats[n]).epsilon(1e-9));
  }
}

TEST_CASE("drifted switch-walk-switch entropy is exactly (n+1) log 2") {
  auto curve = lamplighter_sws_entropy(25, true);
  for (int n = 1; n <= 25; ++n)
    CHECK(curve.entropy_nats[n - 1] == doctest::Approx((n + 1) * std::log(2.0)).epsilon(1e-12));
}
