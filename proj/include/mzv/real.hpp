#pragma once

#include "mzv/exactalg.hpp"

#include <mpfr.h>

#include <string>

namespace mzv {

/// Owning MPFR value with explicit precision (bits). Binary operations produce
/// the larger operand precision and round to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  static Real from_si(long v, mpfr_prec_t prec);
  static Real from_rational(const Rational& q, mpfr_prec_t prec);
  static Real from_string(const std::string& s, mpfr_prec_t prec);
  static Real pi(mpfr_prec_t prec);
  static Real log2(mpfr_prec_t prec);
  /// 2^e exactly.
  static Real exp2(long e, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with the given number of significant digits.
  std::string str(int digits) const;

  Real abs() const;
  Real pow(long e) const;
  Real mul_2si(long e) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  Real operator-() const;

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  void widen_to(mpfr_prec_t p);
  mpfr_t v_;
};

/// Error-bound arithmetic: 64-bit values rounded upward.
namespace errb {
Real zero();
Real from_double(double d);
Real from_real(const Real& x);     // |x| rounded up
Real from_rational(const Rational& q);  // |q| rounded up
Real ulp_bound(const Real& x);     // |x| * 2^{1-prec(x)} rounded up
Real add(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real pow10(long e);                // 10^e rounded up
}  // namespace errb

mpfr_prec_t bits_for_digits(int digits);

}  // namespace mzv
