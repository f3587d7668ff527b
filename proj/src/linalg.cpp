#include "groupwalk/linalg.hpp"

#include "groupwalk/errors.hpp"

namespace groupwalk {

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && sgn(at(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t j = col; j < cols_; ++j) std::swap(at(row, j), at(pivot, j));
    Rational inv = 1 / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || sgn(at(i, col)) == 0) continue;
      Rational f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix a) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivots = a.rref();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n)
    throw PreconditionError("solve_linear needs a square system");
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() != n || pivots.back() == n)
    throw PreconditionError("solve_linear: singular system");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
  return x;
}

RowSpace::RowSpace(std::vector<std::vector<Rational>> rows) : ambient_(0) {
  if (!rows.empty()) ambient_ = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ambient_) throw PreconditionError("RowSpace rows must have equal length");
  RationalMatrix m(rows.size(), ambient_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ambient_; ++j) m.at(i, j) = rows[i][j];
  pivots_ = m.rref();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::vector<Rational> r(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) r[j] = m.at(i, j);
    rows_.push_back(std::move(r));
  }
}

bool RowSpace::contains(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw PreconditionError("RowSpace vector arity mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (sgn(c) == 0) continue;
    Rational f = c;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[i][j];
  }
  for (const Rational& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

bool RowSpace::contains_all(const std::vector<std::vector<Rational>>& vs) const {
  for (const auto& v : vs)
    if (!contains(v)) return false;
  return true;
}

}  // namespace groupwalk
