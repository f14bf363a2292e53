#pragma once

#include "mzv/mzvword.hpp"
#include "mzv/real.hpp"

#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

/// Value with a rigorous absolute error bound.
struct BigReal {
  Real value;
  Real err;  // >= 0, upward-rounded

  BigReal() : value(64), err(errb::zero()) {}
  BigReal(Real v, Real e) : value(std::move(v)), err(std::move(e)) {}
  static BigReal exact(const Rational& q, mpfr_prec_t prec);

  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  BigReal scaled(const Rational& c) const;
};

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- primary engine: Hoelder split at 1/2 -----------------------------

/// I(0; w; 1) for a convergent word, |err| <= 10^-digits.
BigReal eval_word(const Word& w, int digits);
BigReal eval_index(const SignedIndex& i, int digits);

/// Values of the prefixes I(0; w[:k]; y) for k = 0..|w| via the coefficient
/// recurrence; M terms; the first letter must be nonzero (or w empty).
std::vector<Real> prefix_values(const Word& w, const Real& y, int M, mpfr_prec_t prec);

// ---- constants ---------------------------------------------------------

BigReal pi_power(int k, int digits);
BigReal log2_const(int digits);
BigReal zeta_single(int n, int digits);
BigReal zeta_single_alt(int n, int digits);

// ---- independent oracles -----------------------------------------------

/// sum_{j>=0} [(j+a)^-k - (j+b)^-k] (b may be omitted: plain Hurwitz sum,
/// k >= 2) by direct summation plus an Euler-Maclaurin tail with explicit
/// remainder bound.
BigReal hurwitz_sum(int k, const Rational& a, int digits);
BigReal hurwitz_diff(int k, const Rational& a, const Rational& b, int digits);

/// Direct nested summation (depth <= 3) with N outer terms, a first-order
/// tail correction and a majorant bound on the rest. Depth 1 is exact to
/// `digits` via Euler-Maclaurin.
BigReal oracle_eval(const SignedIndex& i, int digits, long N = 1L << 18);

/// Multiple t value by the odd-denominator series; chooses N adaptively and
/// throws PrecisionError when 10^-digits is out of reach.
BigReal eval_t(const std::vector<int>& parts, int digits);

// ---- persistent cache ---------------------------------------------------

class ConstCache {
 public:
  struct Entry {
    std::string value;
    std::string err;
    int digits = 0;
  };

  bool load(const std::string& path);  // false if missing; corrupt entries dropped
  void save(const std::string& path) const;
  bool lookup(const std::string& key, int digits, BigReal& out) const;
  void store(const std::string& key, const BigReal& v, int digits);
  std::size_t size() const;
  std::size_t dropped() const { return dropped_; }

 private:
  mutable std::shared_mutex mu_;
  std::map<std::string, Entry> entries_;
  std::size_t dropped_ = 0;
};

// ---- batch evaluation -----------------------------------------------------

std::vector<BigReal> eval_batch_serial(const std::vector<SignedIndex>& xs, int digits);
/// OpenMP over indices; results identical to the serial reference.
std::vector<BigReal> eval_batch_parallel(const std::vector<SignedIndex>& xs, int digits, int jobs);

/// Memoising evaluator for LinCombs at a fixed precision.
class Evaluator {
 public:
  explicit Evaluator(int digits, ConstCache* cache = nullptr) : digits_(digits), cache_(cache) {}

  int digits() const { return digits_; }
  BigReal index(const SignedIndex& i);
  BigReal lincomb(const LinComb& c);
  /// Evaluates every not-yet-known index, in parallel when jobs > 1.
  void prefetch(const std::vector<SignedIndex>& xs, int jobs);
  void prefetch(const LinComb& c, int jobs);

 private:
  int digits_;
  ConstCache* cache_;
  std::shared_mutex mu_;
  std::map<SignedIndex, BigReal> memo_;
};

}  // namespace mzv
