#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mzv {

using Integer = mpz_class;
using Rational = mpq_class;  // canonicalised after every arithmetic op by gmpxx

/// Bernoulli number B_n with B_1 = -1/2. Memoised; safe to call concurrently.
Rational bernoulli(int n);

/// Euler number E_n: coefficient of t^n/n! in sech(t). Memoised.
Integer euler_number(int n);

/// Generalised binomial coefficient. Negative n is allowed,
/// binom(-n,k) = (-1)^k binom(n+k-1,k); k < 0 gives 0.
Rational binom(long n, long k);
Integer binom_z(long n, long k);

Integer factorial(long n);

/// 2^e for any integer e.
Rational pow2(long e);
Rational rpow(const Rational& x, long e);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial over Q. Terms are keyed by exponent vector in
/// lexicographic order; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly pow(int e) const;

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// -1 if not homogeneous (or zero).
  int homogeneous_degree() const;
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

/// Composition p(assignment[0], ..., assignment[nvars-1]).
MultiPoly poly_substitute(const MultiPoly& p, const std::vector<MultiPoly>& assignment);

/// All exponent vectors of total degree d in n variables, graded-lex descending
/// (x1^d first).
std::vector<Exponent> monomials_of_degree(int nvars, int d);

/// Dense rational matrix with fraction-free elimination helpers.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void append_row(const std::vector<Rational>& row);

  std::size_t rank() const;
  /// Basis of {x : A x = 0}; each vector has first nonzero entry 1.
  std::vector<std::vector<Rational>> nullspace() const;
  /// Reduced row echelon form and pivot columns.
  RatMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Some x with A x = b, or false if inconsistent.
  bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace mzv
