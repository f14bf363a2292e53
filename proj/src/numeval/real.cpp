#include "mzv/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mzv {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_si(long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_si(r.v_, v, MPFR_RNDN);
  return r;
}

Real Real::from_rational(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real Real::from_string(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) throw std::invalid_argument("bad real: " + s);
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::log2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::exp2(long e, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), v_);
  return std::string(buf.data());
}

Real Real::abs() const {
  Real r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::pow(long e) const {
  Real r(prec());
  mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

Real Real::mul_2si(long e) const {
  Real r(prec());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

void Real::widen_to(mpfr_prec_t p) {
  if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
}

Real& Real::operator+=(const Real& o) {
  widen_to(o.prec());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen_to(o.prec());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen_to(o.prec());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen_to(o.prec());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace errb {

constexpr mpfr_prec_t kErrPrec = 64;

Real zero() { return Real(kErrPrec); }

Real from_double(double d) {
  Real r(kErrPrec);
  mpfr_set_d(r.get(), std::fabs(d), MPFR_RNDU);
  return r;
}

Real from_real(const Real& x) {
  Real r(kErrPrec);
  mpfr_abs(r.get(), x.get(), MPFR_RNDU);
  return r;
}

Real from_rational(const Rational& q) {
  Real r(kErrPrec);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(r.get(), r.get(), MPFR_RNDU);
  return r;
}

Real ulp_bound(const Real& x) {
  Real r = from_real(x);
  mpfr_mul_2si(r.get(), r.get(), 1 - static_cast<long>(x.prec()), MPFR_RNDU);
  return r;
}

Real add(const Real& a, const Real& b) {
  Real r(kErrPrec);
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real mul(const Real& a, const Real& b) {
  Real r(kErrPrec);
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

Real pow10(long e) {
  Real r(kErrPrec);
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDU);
  if (e < 0) {
    Real one(kErrPrec);
    mpfr_set_ui(one.get(), 1, MPFR_RNDN);
    // 1/10^|e| rounded up needs the denominator rounded down
    Real den(kErrPrec);
    mpfr_ui_pow_ui(den.get(), 10, static_cast<unsigned long>(-e), MPFR_RNDD);
    mpfr_div(r.get(), one.get(), den.get(), MPFR_RNDU);
  }
  return r;
}

}  // namespace errb

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 32;
}

}  // namespace mzv
