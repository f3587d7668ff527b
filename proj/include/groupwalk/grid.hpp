#pragma once

#include <utility>
#include <vector>

#include "groupwalk/rational.hpp"

namespace groupwalk {

// Triangular coefficient array for the free commuting two-generator model:
// row k holds the coefficients of zeta^k eta^l (l = 0..n-k) in
// sum_{j=0}^n mu^{*j} with mu = (zeta + eta)/2, i.e. 2^-(k+l) C(k+l, k).
class CoefficientGrid {
 public:
  static CoefficientGrid build(int horizon);

  int horizon() const { return horizon_; }
  const std::vector<Rational>& row(int k) const { return rows_.at(k); }
  const Rational& at(int k, int l) const { return rows_.at(k).at(l); }

 private:
  explicit CoefficientGrid(int horizon) : horizon_(horizon) {}

  int horizon_;
  std::vector<std::vector<Rational>> rows_;
};

// Real-mode row of the same grid, by multiplicative recurrence. Values whose
// binary exponent falls below the representable range come out as 0.
std::vector<double> real_grid_row(int k, int length);

// One geometric block of the layer-cake rewrite of a row:
// weight * eta^start * (1 + eta + ... + eta^length).
struct StaircaseBlock {
  int start;
  int length;
  Rational weight;
};

// Layer-cake decomposition of a positive unimodal row into geometric blocks;
// expanding the blocks reproduces the row exactly.
std::vector<StaircaseBlock> staircase(const std::vector<Rational>& row);

std::vector<Rational> expand_staircase(const std::vector<StaircaseBlock>& blocks,
                                       std::size_t row_length);

// || G_n * (delta_e - eta) ||_1 in the free commuting model, with
// G_n = (1/(n+1)) sum_{j=0}^n mu^{*j}.
Rational decay_norm_exact(int n);
double decay_norm_real(int n);

// f(n) sqrt(n) / n + 2 / f(n) with f(n) = n^f_exponent.
double coarse_bound(long long n, double f_exponent);

// sum_{i=1}^{n} 8 f(i)^3 / (sqrt(pi) i^{3/2}): the analytic majorant of the
// windowed central-difference sum below.
double refined_bound(long long n, double f_exponent);

// sum_i sum_{|j-i| <= f(i)} (a_{i,j} - min of the two window-boundary values),
// computed from grid values.
double refined_difference_sum(int n, double f_exponent);

struct ExponentFit {
  double exponent;  // sign-flipped log-log slope
  double residual;  // root mean square of log-space fit errors
};

// Least-squares power-law fit through (n, value) points; needs >= 4 points,
// all values > 0.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points);

enum class GridMode { exact, real };

struct DecayReport {
  std::vector<long long> ns;
  std::vector<double> decay_norms;
  std::vector<double> coarse_bounds;
  std::vector<double> refined_bounds;
  std::vector<double> cumulative_runtime_ms;
  bool has_fit = false;
  ExponentFit fit{0.0, 0.0};
};

DecayReport run_decay_experiment(const std::vector<long long>& ns, double f_exponent,
                                 GridMode mode);

}  // namespace groupwalk
