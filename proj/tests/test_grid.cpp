#include <cmath>

#include "doctest.h"
#include "groupwalk/errors.hpp"
#include "groupwalk/grid.hpp"
#include "groupwalk/measure.hpp"

using namespace groupwalk;

namespace {

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> fracs) {
  std::vector<Rational> out;
  for (auto [p, q] : fracs) out.push_back(rational(p, q));
  return out;
}

// Independent route: build G_n * (delta_e - eta) with actual measure algebra
// on Z^2 and take its l1 norm.
Rational decay_norm_via_measures(int n) {
  auto z2 = make_zd(2);
  auto mu = RationalProbability::uniform(z2, {{1, 0}, {0, 1}});
  auto eta = RationalMeasure::dirac(z2, {0, 1});
  auto gn = n == 0 ? RationalMeasure::dirac_identity(z2) : mu.cesaro(n).measure();
  return gn.convolve(RationalMeasure::dirac_identity(z2) - eta).l1_norm();
}

}  // namespace

TEST_CASE("worked grid rows") {
  auto g6 = CoefficientGrid::build(6);
  CHECK(g6.row(2) == rationals({{1, 4}, {3, 8}, {6, 16}, {10, 32}, {15, 64}}));

  auto g8 = CoefficientGrid::build(8);
  CHECK(g8.row(3) == rationals({{1, 8}, {4, 16}, {10, 32}, {20, 64}, {35, 128}, {56, 256}}));

  CHECK(g6.at(0, 0) == 1);
  CHECK_THROWS_AS(CoefficientGrid::build(0), PreconditionError);
  CHECK_THROWS_AS(CoefficientGrid::build(4096), ResourceError);
}

TEST_CASE("row monotonicity law") {
  auto grid = CoefficientGrid::build(64);
  for (int k = 0; k <= 64; ++k)
    for (int l = 0; l + 1 <= 64 - k; ++l) {
      const Rational& cur = grid.at(k, l);
      const Rational& nxt = grid.at(k, l + 1);
      if (l < k - 1)
        CHECK(nxt > cur);
      else if (l == k - 1)
        CHECK(nxt == cur);
      else
        CHECK(nxt < cur);
    }
}

TEST_CASE("diagonal sums are 1") {
  auto grid = CoefficientGrid::build(40);
  for (int s = 0; s <= 40; ++s) {
    Rational sum(0);
    for (int k = 0; k <= s; ++k) sum += grid.at(k, s - k);
    CHECK(sum == 1);
  }
}

TEST_CASE("staircase decomposition") {
  auto blocks = staircase(rationals({{3, 8}, {3, 8}}));
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].start == 0);
  CHECK(blocks[0].length == 1);
  CHECK(blocks[0].weight == rational(3, 8));

  auto g8 = CoefficientGrid::build(8);
  for (int k : {2, 3}) {
    auto row = CoefficientGrid::build(k == 2 ? 6 : 8).row(k);
    auto decomposition = staircase(row);
    for (const auto& b : decomposition) CHECK(b.weight > 0);
    CHECK(expand_staircase(decomposition, row.size()) == row);
  }

  // all rows of grid(64)
  auto grid = CoefficientGrid::build(64);
  for (int k = 0; k <= 64; ++k) {
    auto decomposition = staircase(grid.row(k));
    CHECK(expand_staircase(decomposition, grid.row(k).size()) == grid.row(k));
  }

  CHECK_THROWS_AS(staircase(rationals({{1, 2}, {1, 4}, {1, 2}})), PreconditionError);
  CHECK_THROWS_AS(staircase(rationals({{-1, 2}})), PreconditionError);
}

TEST_CASE("decay norm, exact") {
  CHECK(decay_norm_exact(0) == 2);
  CHECK(decay_norm_exact(1) == rational(3, 2));

  // independent oracle via measure algebra on Z^2
  for (int n : {0, 1, 2, 3, 5, 9, 17, 30})
    CHECK(decay_norm_exact(n) == decay_norm_via_measures(n));

  Rational prev = decay_norm_exact(1);
  for (int n = 2; n <= 200; ++n) {
    Rational cur = decay_norm_exact(n);
    CHECK(cur < prev);
    CHECK(cur <= 2);
    prev = cur;
  }
}

TEST_CASE("decay norm, real mode matches exact") {
  for (int n = 0; n <= 200; ++n) {
    double exact = to_double(decay_norm_exact(n));
    CHECK(std::abs(decay_norm_real(n) - exact) <= 1e-9);
  }
}

TEST_CASE("real rows survive deep underflow territory") {
  // row heads 2^-k underflow for k > 1074; peak values near l = k must not
  auto row = real_grid_row(1200, 1250);
  CHECK(row[0] == 0.0);
  CHECK(row[1199] > 0.0);
  CHECK(row[1199] == doctest::Approx(1.0 / std::sqrt(M_PI * 1200)).epsilon(1e-3));
}

TEST_CASE("coarse and refined bounds") {
  CHECK(coarse_bound(16, 0.25) == doctest::Approx(1.5));

  // windowed central-difference sum stays below the analytic majorant
  CHECK(refined_difference_sum(50, 0.25) <= refined_bound(50, 0.25));
  CHECK(refined_difference_sum(200, 0.25) <= refined_bound(200, 0.25));

  // constant-free coarse bound comparison over the exact sweep
  for (int n = 16; n <= 200; ++n)
    CHECK(to_double(decay_norm_exact(n)) <= coarse_bound(n, 0.25));
}

TEST_CASE("exponent fit") {
  std::vector<std::pair<double, double>> pts;
  for (double n : {100.0, 200.0, 400.0, 800.0}) pts.push_back({n, std::pow(n, -0.5)});
  auto fit = fit_exponent(pts);
  CHECK(fit.exponent == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fit.residual == doctest::Approx(0.0).epsilon(1e-12));

  pts.clear();
  for (double n : {100.0, 300.0, 900.0, 2700.0, 8100.0})
    pts.push_back({n, 7.25 * std::pow(n, -0.375)});
  fit = fit_exponent(pts);
  CHECK(fit.exponent == doctest::Approx(0.375).epsilon(1e-12));

  CHECK_THROWS_AS(fit_exponent({{1.0, 1.0}, {2.0, 0.5}}), PreconditionError);
  CHECK_THROWS_AS(fit_exponent({{1.0, 1.0}, {2.0, 0.5}, {3.0, 0.0}, {4.0, 0.1}}),
                  PreconditionError);
}

TEST_CASE("decay experiment report") {
  auto report = run_decay_experiment({40, 10, 20, 80}, 0.25, GridMode::exact);
  CHECK(report.ns == std::vector<long long>{10, 20, 40, 80});  // sorted
  CHECK(report.decay_norms.size() == 4);
  CHECK(report.has_fit);
  CHECK(report.fit.exponent > 0.3);
  CHECK(std::is_sorted(report.cumulative_runtime_ms.begin(), report.cumulative_runtime_ms.end()));

  auto real_report = run_decay_experiment({10, 20, 40, 80}, 0.25, GridMode::real);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(real_report.decay_norms[i] == doctest::Approx(report.decay_norms[i]).epsilon(1e-9));
}
