#include "mzv/exactalg.hpp"

#include <doctest.h>
#include <random>

using namespace mzv;

namespace {

// Pascal's triangle, independent of binom()
std::vector<std::vector<Integer>> pascal(int n) {
  std::vector<std::vector<Integer>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t;
}

MultiPoly x(int i) { return MultiPoly::variable(3, i); }

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(10) == Rational(5, 66));
  CHECK(bernoulli(20) == Rational(-174611, 330));

  // sum_{k<=n} binom(n+1,k) B_k = 0 for n >= 1
  const auto P = pascal(41);
  for (int n = 1; n <= 40; ++n) {
    Rational s;
    for (int k = 0; k <= n; ++k) s += Rational(P[n + 1][k]) * bernoulli(k);
    CHECK(s == 0);
  }
  for (int n = 3; n <= 41; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("euler numbers") {
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  CHECK(euler_number(8) == 1385);
  // sech * cosh = 1: sum over even k of binom(n,k) E_k = 0 for even n >= 2
  const auto P = pascal(30);
  for (int n = 2; n <= 30; n += 2) {
    Integer s = 0;
    for (int k = 0; k <= n; k += 2) s += P[n][k] * euler_number(k);
    CHECK(s == 0);
  }
  for (int n = 1; n <= 29; n += 2) CHECK(euler_number(n) == 0);
}

TEST_CASE("binomials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, 7) == 0);
  CHECK(binom(-2, 3) == -4);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(0, 0) == 1);
  const auto P = pascal(25);
  for (int n = 0; n <= 25; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binom(n, k) == Rational(P[n][k]));
  // upper negation
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= 8; ++k) CHECK(binom(-n, k) == Rational(k % 2 ? -1 : 1) * binom(n + k - 1, k));
}

TEST_CASE("powers and rational text") {
  CHECK(pow2(-3) == Rational(1, 8));
  CHECK(pow2(10) == 1024);
  CHECK(rpow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(rpow(Rational(-2), -2) == Rational(1, 4));
  CHECK(parse_rational(to_string(Rational(-7, 12))) == Rational(-7, 12));
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("poly_substitute") {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  CHECK(poly_substitute(x1 * x2, {x2, x1}) == x1 * x2);
  const MultiPoly y1 = MultiPoly::variable(2, 0), y2 = MultiPoly::variable(2, 1);
  CHECK(poly_substitute(MultiPoly::variable(1, 0).pow(2), {y1 + y2}) == y1 * y1 + y1 * y2 * Rational(2) + y2 * y2);
  CHECK(poly_substitute(x(0) - x(1), {x(1), x(2), x(0)}) == x(1) - x(2));
}

TEST_CASE("multipoly arithmetic") {
  const MultiPoly p = x(0) + x(1) * Rational(2) - x(2);
  const MultiPoly q = x(0) * x(1) - x(2) * x(2);
  CHECK((p + q) * (p - q) == p * p - q * q);
  CHECK(p.pow(3) == p * p * p);
  CHECK(p.pow(3).homogeneous_degree() == 3);
  CHECK((p + q).homogeneous_degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(MultiPoly::monomial({1, 2, 0}, 3).coeff({1, 2, 0}) == 3);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Exponent{2, 0, 0});
}

TEST_CASE("matrix nullspace, rank and solve") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial * 7) % 6;
    RatMatrix A(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) A(i, j) = Rational(d(rng)) / (1 + trial % 3);
    const auto N = A.nullspace();
    CHECK(A.rank() + N.size() == cols);
    for (const auto& v : N) {
      std::size_t first = 0;
      while (v[first] == 0) ++first;
      CHECK(v[first] == 1);
      for (std::size_t i = 0; i < rows; ++i) {
        Rational s;
        for (std::size_t j = 0; j < cols; ++j) s += A(i, j) * v[j];
        CHECK(s == 0);
      }
    }
    // b in the column space is solvable
    std::vector<Rational> b(rows), x;
    for (std::size_t i = 0; i < rows; ++i) b[i] = A(i, 0) - A(i, cols - 1);
    REQUIRE(A.solve(b, x));
    for (std::size_t i = 0; i < rows; ++i) {
      Rational s;
      for (std::size_t j = 0; j < cols; ++j) s += A(i, j) * x[j];
      CHECK(s == b[i]);
    }
    std::vector<std::size_t> piv;
    const RatMatrix R = A.rref(&piv);
    CHECK(piv.size() == A.rank());
    CHECK(R.rref().rank() == R.rank());
  }
  RatMatrix I(2, 2);
  I(0, 0) = 1;
  I(1, 0) = 1;
  std::vector<Rational> x;
  CHECK_FALSE(I.solve({1, 2}, x));
}
