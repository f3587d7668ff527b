#include "doctest.h"
#include "groupwalk/errors.hpp"
#include "groupwalk/linalg.hpp"

using namespace groupwalk;

TEST_CASE("rref and rank") {
  RationalMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(2, 2) = 5;
  CHECK(m.rank() == 2);

  auto pivots = m.rref();
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 2) == 1);
}

TEST_CASE("kernel basis") {
  // x + 2y = 0 over 3 unknowns: kernel dim 2
  RationalMatrix m(1, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) CHECK(v[0] + 2 * v[1] == 0);

  RationalMatrix id = RationalMatrix::identity(4);
  CHECK(kernel_basis(id).empty());
}

TEST_CASE("solve_linear") {
  RationalMatrix a(2, 2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 1;
  auto x = solve_linear(a, {rational(3), rational(2)});
  CHECK(x == std::vector<Rational>{rational(1), rational(1)});

  RationalMatrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 1;
  CHECK_THROWS_AS(solve_linear(sing, {rational(1), rational(0)}), PreconditionError);
}

TEST_CASE("row space membership") {
  RowSpace space({{rational(1), rational(0), rational(1)}, {rational(0), rational(1), rational(1)}});
  CHECK(space.dim() == 2);
  CHECK(space.contains({rational(2), rational(3), rational(5)}));
  CHECK(!space.contains({rational(1), rational(0), rational(0)}));
  CHECK(space.contains_all(space.basis()));
}
