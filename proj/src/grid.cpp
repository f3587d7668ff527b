#include "groupwalk/grid.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "groupwalk/errors.hpp"

namespace groupwalk {

namespace {

constexpr int kExactHorizonCap = 1024;
constexpr int kRealHorizonCap = 60000;
// Below 2^-1060 a grid value cannot influence any norm at the scales in play;
// the mantissa/exponent walk skips materializing such values instead of
// letting the row head 2^-k underflow to zero and poison the recurrence.
constexpr int kMinExponent = -1060;

void check_horizon(int n, int cap, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + " needs n >= 0");
  if (n > cap)
    throw ResourceError(std::string(what) + " horizon " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
}

// Walks one grid row in real mode keeping the value as mantissa * 2^exponent.
class RowWalker {
 public:
  explicit RowWalker(int k) : k_(k), mantissa_(0.5), exponent_(1 - k) {}

  // current value c_{k,l}, or 0 when it is far below double range
  double value() const { return exponent_ > kMinExponent ? std::ldexp(mantissa_, exponent_) : 0.0; }

  void advance(int l) {  // c_{k,l} from c_{k,l-1}
    mantissa_ *= static_cast<double>(k_ + l) / (2.0 * l);
    int shift;
    mantissa_ = std::frexp(mantissa_, &shift);
    exponent_ += shift;
  }

 private:
  int k_;
  double mantissa_;
  int exponent_;
};

}  // namespace

CoefficientGrid CoefficientGrid::build(int horizon) {
  if (horizon < 1) throw PreconditionError("grid needs n >= 1");
  check_horizon(horizon, kExactHorizonCap, "exact grid");
  CoefficientGrid grid(horizon);
  grid.rows_.reserve(horizon + 1);
  for (int k = 0; k <= horizon; ++k) {
    std::vector<Rational> row;
    row.reserve(horizon - k + 1);
    Rational c = rational(1);
    for (int i = 0; i < k; ++i) c /= 2;
    row.push_back(c);
    for (int l = 1; l <= horizon - k; ++l) {
      c *= rational(k + l, 2 * l);
      row.push_back(c);
    }
    grid.rows_.push_back(std::move(row));
  }
  return grid;
}

std::vector<double> real_grid_row(int k, int length) {
  check_horizon(k, kRealHorizonCap, "real grid row");
  std::vector<double> row;
  row.reserve(length);
  RowWalker w(k);
  if (length > 0) row.push_back(w.value());
  for (int l = 1; l < length; ++l) {
    w.advance(l);
    row.push_back(w.value());
  }
  return row;
}

std::vector<StaircaseBlock> staircase(const std::vector<Rational>& row) {
  if (row.empty()) return {};
  const int len = static_cast<int>(row.size());
  int peak = 0;
  for (int i = 1; i < len; ++i)
    if (row[i] > row[peak]) peak = i;
  for (int i = 0; i < len; ++i) {
    if (row[i] <= 0) throw PreconditionError("staircase needs a positive row");
    if (i < peak && row[i] > row[i + 1]) throw PreconditionError("staircase needs a unimodal row");
    if (i > peak && row[i] > row[i - 1]) throw PreconditionError("staircase needs a unimodal row");
  }

  std::vector<Rational> levels = row;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<StaircaseBlock> blocks;
  Rational below(0);
  for (const Rational& level : levels) {
    int lo = 0, hi = len - 1;
    while (row[lo] < level) ++lo;
    while (row[hi] < level) --hi;
    blocks.push_back({lo, hi - lo, level - below});
    below = level;
  }
  return blocks;
}

std::vector<Rational> expand_staircase(const std::vector<StaircaseBlock>& blocks,
                                       std::size_t row_length) {
  std::vector<Rational> out(row_length, Rational(0));
  for (const auto& b : blocks)
    for (int l = b.start; l <= b.start + b.length; ++l) out.at(l) += b.weight;
  return out;
}

Rational decay_norm_exact(int n) {
  check_horizon(n, kExactHorizonCap, "exact decay norm");
  Rational total(0);
  for (int k = 0; k <= n; ++k) {
    Rational c = rational(1);
    for (int i = 0; i < k; ++i) c /= 2;
    Rational prev(0);
    Rational row = abs(c - prev);
    prev = c;
    for (int l = 1; l <= n - k; ++l) {
      c *= rational(k + l, 2 * l);
      row += abs(c - prev);
      prev = c;
    }
    row += prev;  // trailing |0 - c_{k,n-k}|
    total += row;
  }
  return total / rational(n + 1);
}

double decay_norm_real(int n) {
  check_horizon(n, kRealHorizonCap, "real decay norm");
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    RowWalker w(k);
    double prev = 0.0, row = 0.0;
    double c = w.value();
    row += std::abs(c - prev);
    prev = c;
    for (int l = 1; l <= n - k; ++l) {
      w.advance(l);
      c = w.value();
      row += std::abs(c - prev);
      prev = c;
    }
    row += prev;
    total += row;
  }
  return total / (n + 1);
}

double coarse_bound(long long n, double f_exponent) {
  if (n < 1) throw PreconditionError("coarse_bound needs n >= 1");
  double f = std::pow(static_cast<double>(n), f_exponent);
  return f * std::sqrt(static_cast<double>(n)) / static_cast<double>(n) + 2.0 / f;
}

double refined_bound(long long n, double f_exponent) {
  if (n < 1) throw PreconditionError("refined_bound needs n >= 1");
  double sum = 0.0;
  for (long long i = 1; i <= n; ++i) {
    double f = std::pow(static_cast<double>(i), f_exponent);
    sum += 8.0 * f * f * f / (std::sqrt(M_PI) * std::pow(static_cast<double>(i), 1.5));
  }
  return sum;
}

double refined_difference_sum(int n, double f_exponent) {
  check_horizon(n, kRealHorizonCap, "refined difference sum");
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    int f = static_cast<int>(std::floor(std::pow(static_cast<double>(i), f_exponent)));
    int jlo = std::max(0, i - f);
    int jhi = i + f;
    // row i as a function of j, materialized across the window
    RowWalker w(i);
    std::vector<double> window;
    double c = w.value();
    if (jlo == 0) window.push_back(c);
    for (int j = 1; j <= jhi; ++j) {
      w.advance(j);
      c = w.value();
      if (j >= jlo) window.push_back(c);
    }
    double boundary = std::min(window.front(), window.back());
    for (double v : window) sum += v - boundary;
  }
  return sum;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4) throw PreconditionError("fit_exponent needs at least 4 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(points.size());
  std::vector<std::pair<double, double>> logs;
  for (const auto& [n, v] : points) {
    if (!(v > 0)) throw PreconditionError("fit_exponent needs positive values");
    double x = std::log(n), y = std::log(v);
    logs.push_back({x, y});
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  double intercept = (sy - slope * sx) / m;
  double sq = 0;
  for (const auto& [x, y] : logs) {
    double r = y - (slope * x + intercept);
    sq += r * r;
  }
  return {-slope, std::sqrt(sq / m)};
}

DecayReport run_decay_experiment(const std::vector<long long>& ns, double f_exponent,
                                 GridMode mode) {
  DecayReport report;
  report.ns = ns;
  std::sort(report.ns.begin(), report.ns.end());
  const auto start = std::chrono::steady_clock::now();
  for (long long n : report.ns) {
    double value = mode == GridMode::exact ? to_double(decay_norm_exact(static_cast<int>(n)))
                                           : decay_norm_real(static_cast<int>(n));
    report.decay_norms.push_back(value);
    report.coarse_bounds.push_back(coarse_bound(n, f_exponent));
    report.refined_bounds.push_back(refined_bound(n, f_exponent));
    auto now = std::chrono::steady_clock::now();
    report.cumulative_runtime_ms.push_back(
        std::chrono::duration<double, std::milli>(now - start).count());
  }
  if (report.ns.size() >= 4) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < report.ns.size(); ++i)
      pts.push_back({static_cast<double>(report.ns[i]), report.decay_norms[i]});
    report.fit = fit_exponent(pts);
    report.has_fit = true;
  }
  return report;
}

}  // namespace groupwalk
