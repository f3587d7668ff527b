#pragma once

#include <cstddef>
#include <vector>

#include "groupwalk/rational.hpp"

namespace groupwalk {

// Dense matrix over exact rationals. Small sizes only (|G| x |G| for the
// finite groups in play), so plain Gaussian elimination over mpq is exact and
// fast enough; no tolerance enters anywhere.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  RationalMatrix transposed() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

// Canonical basis of { x : A x = 0 } from the reduced echelon form.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix a);

// Solves A x = b for square invertible A; throws PreconditionError if A is
// singular.
std::vector<Rational> solve_linear(RationalMatrix a, std::vector<Rational> b);

// Row space in reduced echelon form, for exact span membership and subspace
// comparisons.
class RowSpace {
 public:
  explicit RowSpace(std::vector<std::vector<Rational>> rows);

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  bool contains(std::vector<Rational> v) const;
  bool contains_all(const std::vector<std::vector<Rational>>& vs) const;

  const std::vector<std::vector<Rational>>& basis() const { return rows_; }

 private:
  std::size_t ambient_;
  std::vector<std::vector<Rational>> rows_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

}  // namespace groupwalk
