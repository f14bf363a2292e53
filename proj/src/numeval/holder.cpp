#include "mzv/numeval.hpp"

#include <cmath>

namespace mzv {

BigReal BigReal::exact(const Rational& q, mpfr_prec_t prec) {
  Real v = Real::from_rational(q, prec);
  Real e = errb::ulp_bound(v);
  return {std::move(v), std::move(e)};
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  Real v = a.value + b.value;
  Real e = errb::add(errb::add(a.err, b.err), errb::ulp_bound(v));
  return {std::move(v), std::move(e)};
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  Real v = a.value - b.value;
  Real e = errb::add(errb::add(a.err, b.err), errb::ulp_bound(v));
  return {std::move(v), std::move(e)};
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  Real v = a.value * b.value;
  Real e = errb::mul(errb::from_real(a.value), b.err);
  e = errb::add(e, errb::mul(errb::from_real(b.value), a.err));
  e = errb::add(e, errb::mul(a.err, b.err));
  e = errb::add(e, errb::ulp_bound(v));
  return {std::move(v), std::move(e)};
}

BigReal BigReal::scaled(const Rational& c) const {
  Real cr = Real::from_rational(c, value.prec());
  Real v = value * cr;
  Real e = errb::mul(errb::from_rational(c), err);
  e = errb::add(e, errb::mul(errb::from_real(value), errb::ulp_bound(cr)));
  e = errb::add(e, errb::ulp_bound(v));
  return {std::move(v), std::move(e)};
}

std::vector<Real> prefix_values(const Word& w, const Real& y, int M, mpfr_prec_t prec) {
  std::vector<Real> d(M + 1, Real(prec)), nd(M + 1, Real(prec));
  mpfr_set_ui(d[0].get(), 1, MPFR_RNDN);
  std::vector<Real> out;
  out.reserve(w.size() + 1);
  out.push_back(Real::from_si(1, prec));
  Real rho(prec), S(prec), tmp(prec), sum(prec);
  for (Letter a : w) {
    if (a == 0) {
      // d_m <- d_m / m; requires d_0 = 0
      if (!d[0].is_zero()) throw std::invalid_argument("prefix_values: word starts with 0");
      for (int m = 1; m <= M; ++m) mpfr_div_ui(d[m].get(), d[m].get(), static_cast<unsigned long>(m), MPFR_RNDN);
    } else {
      // d'_N = -(1/N) sum_{m<N} d_m rho^{N-m}, rho = y/a
      mpfr_div_si(rho.get(), y.get(), a, MPFR_RNDN);
      mpfr_set_zero(S.get(), 1);
      mpfr_set_zero(nd[0].get(), 1);
      for (int m = 1; m <= M; ++m) {
        mpfr_add(tmp.get(), S.get(), d[m - 1].get(), MPFR_RNDN);
        mpfr_mul(S.get(), tmp.get(), rho.get(), MPFR_RNDN);
        mpfr_div_si(nd[m].get(), S.get(), -m, MPFR_RNDN);
      }
      std::swap(d, nd);
    }
    mpfr_set_zero(sum.get(), 1);
    for (int m = 0; m <= M; ++m) mpfr_add(sum.get(), sum.get(), d[m].get(), MPFR_RNDN);
    out.push_back(sum);
  }
  return out;
}

BigReal eval_word(const Word& w, int digits) {
  if (!word_convergent(w)) throw std::invalid_argument("eval_word: divergent word " + format_word(w));
  if (w.empty()) return BigReal::exact(1, bits_for_digits(digits));
  const int n = static_cast<int>(w.size());
  // |d_m| <= 2^-m for |rho| <= 1/2, so each truncated prefix is off by <= 2^-M
  // and sum_k |A_k||B_{n-k}| truncation error <= 5(n+1)2^-M.
  const int M = static_cast<int>(std::ceil(digits * 3.3219280948873623 + std::log2(20.0 * (n + 1)))) + 2;
  const mpfr_prec_t prec = bits_for_digits(digits) + 16 + 2 * static_cast<mpfr_prec_t>(std::ceil(std::log2(n + 1.0) + std::log2(M)));
  const Real half = Real::exp2(-1, prec);
  const auto A = prefix_values(w, half, M, prec);
  Word rc(w.rbegin(), w.rend());
  for (auto& a : rc) a = static_cast<Letter>(1 - a);
  const auto B = prefix_values(rc, half, M, prec);
  Real sum(prec), t(prec);
  for (int k = 0; k <= n; ++k) {
    mpfr_mul(t.get(), A[k].get(), B[n - k].get(), MPFR_RNDN);
    if ((n - k) % 2) mpfr_sub(sum.get(), sum.get(), t.get(), MPFR_RNDN);
    else mpfr_add(sum.get(), sum.get(), t.get(), MPFR_RNDN);
  }
  Real trunc = errb::from_double(5.0 * (n + 1));
  mpfr_mul_2si(trunc.get(), trunc.get(), -M, MPFR_RNDU);
  Real round = errb::from_double(16.0 * (n + 1) * (n + 1) * double(M) * double(M));
  mpfr_mul_2si(round.get(), round.get(), -static_cast<long>(prec), MPFR_RNDU);
  return {std::move(sum), errb::add(trunc, round)};
}

BigReal eval_index(const SignedIndex& i, int digits) {
  if (!i.convergent()) throw std::invalid_argument("eval_index: divergent index " + format_index(i));
  const auto sw = index_to_word(i);
  BigReal r = eval_word(sw.word, digits);
  if (sw.sign < 0) r.value = -r.value;
  return r;
}

BigReal pi_power(int k, int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits) + 16;
  Real v = Real::pi(prec).pow(k);
  Real e = errb::mul(errb::from_double(4.0 * (k + 1)), errb::ulp_bound(v));
  return {std::move(v), std::move(e)};
}

BigReal log2_const(int digits) {
  const mpfr_prec_t prec = bits_for_digits(digits) + 16;
  Real v = Real::log2(prec);
  Real e = errb::ulp_bound(v);
  return {std::move(v), std::move(e)};
}

BigReal zeta_single(int n, int digits) {
  if (n < 2) throw std::invalid_argument("zeta_single: n >= 2 required");
  if (n % 2 == 0) {
    // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
    const int k = n / 2;
    Rational c = bernoulli(n) * pow2(n) / (2 * Rational(factorial(n)));
    if (k % 2 == 0) c = -c;
    return pi_power(n, digits).scaled(c);
  }
  Word w(n, 0);
  w[0] = 1;
  BigReal r = eval_word(w, digits);
  r.value = -r.value;
  return r;
}

BigReal zeta_single_alt(int n, int digits) {
  if (n < 1) throw std::invalid_argument("zeta_single_alt: n >= 1 required");
  if (n == 1) {
    BigReal l = log2_const(digits);
    l.value = -l.value;
    return l;
  }
  return zeta_single(n, digits).scaled(-(1 - pow2(1 - n)));
}

}  // namespace mzv
