#include "mzv/numeval.hpp"

#include <cfloat>
#include <cmath>

namespace mzv {

namespace {

// Rising factorial k(k+1)...(k+m-1).
Integer rising(long k, long m) {
  Integer r = 1;
  for (long i = 0; i < m; ++i) r *= k + i;
  return r;
}

// Euler-Maclaurin for sum_{j>=0} g(j), g(x) = (x+ca)^-k - [has_b] (x+cb)^-k, ca, cb > 0.
// Adds the integral, g(0)/2 and the Bernoulli corrections to `acc`; returns the
// remainder bound 4 (2 pi)^{-2J} sum |component^{(2J-1)}(0)|.
Real em_tail(int k, const Real& ca, const Real* cb, mpfr_prec_t prec, double target, Real& acc, Real& absacc) {
  auto add = [&](const Real& x) {
    acc += x;
    absacc = errb::add(absacc, errb::from_real(x));
  };
  if (k == 1) {
    if (!cb) throw std::invalid_argument("em_tail: k=1 needs a difference");
    Real q = *cb / ca, l(prec);
    mpfr_log(l.get(), q.get(), MPFR_RNDN);
    add(l);
  } else {
    Real i = ca.pow(1 - k) / Real::from_si(k - 1, prec);
    if (cb) i -= cb->pow(1 - k) / Real::from_si(k - 1, prec);
    add(i);
  }
  {
    Real h = ca.pow(-k);
    if (cb) h -= cb->pow(-k);
    add(h.mul_2si(-1));
  }
  const Real two_pi_sq = (Real::pi(64) * Real::from_si(2, 64)).pow(2);
  Real bound(64);
  for (int J = 1; J < 4000; ++J) {
    // component magnitudes |d^{2J-1}/dx^{2J-1} (x+c)^-k| at 0 = (k)_{2J-1} c^{-k-2J+1}
    const Real rk = Real::from_rational(Rational(rising(k, 2 * J - 1)), prec);
    Real da = rk * ca.pow(-k - 2 * J + 1);
    Real db(prec);
    if (cb) db = rk * cb->pow(-k - 2 * J + 1);
    // remainder after J-1 correction terms
    Real rem = errb::add(errb::from_real(da), errb::from_real(db));
    rem = errb::mul(rem, errb::from_double(4.0));
    Real den(64);
    mpfr_pow_ui(den.get(), two_pi_sq.get(), static_cast<unsigned long>(J), MPFR_RNDD);
    mpfr_div(rem.get(), rem.get(), den.get(), MPFR_RNDU);
    if (J > 1 && rem.to_double() <= target) {
      bound = rem;
      break;
    }
    // correction B_{2J}/(2J)! (k)_{2J-1} c^{1-k-2J}, i.e. - B/(2J)! g^{(2J-1)}(0)
    const Rational coef = bernoulli(2 * J) / Rational(factorial(2 * J));
    Real t = (da - db) * Real::from_rational(coef, prec);
    add(t);
    bound = rem;
  }
  return bound;
}

BigReal hurwitz_impl(int k, const Rational& a, const Rational* b, int digits) {
  if (a <= 0 || (b && *b <= 0)) throw std::invalid_argument("hurwitz: shifts must be positive");
  if (!b && k < 2) throw std::invalid_argument("hurwitz: k >= 2 required");
  const mpfr_prec_t prec = bits_for_digits(digits) + 32;
  const long L = std::max(16, digits);
  Real acc(prec), absacc = errb::zero();
  for (long j = 0; j < L; ++j) {
    Real t = Real::from_rational(a + j, prec).pow(-k);
    if (b) t -= Real::from_rational(*b + j, prec).pow(-k);
    acc += t;
    absacc = errb::add(absacc, errb::from_real(t));
  }
  const Real ca = Real::from_rational(a + L, prec);
  Real cbv(prec);
  if (b) cbv = Real::from_rational(*b + L, prec);
  const double target = std::pow(10.0, -digits) / 8;
  Real bound = em_tail(k, ca, b ? &cbv : nullptr, prec, target, acc, absacc);
  Real round = errb::mul(absacc, errb::from_double(64.0 * (L + 4 * digits + 64)));
  mpfr_mul_2si(round.get(), round.get(), -static_cast<long>(prec), MPFR_RNDU);
  return {std::move(acc), errb::add(bound, round)};
}

struct NestedSpec {
  std::vector<int> k, eps;
  long a = 1, b = 0;  // denominators a n + b
};

struct NestedOut {
  Real S{64}, Hprev{64};
  Real round{64};
};

double nested_bound_total(const NestedSpec& s, long N) {
  double t = 1;
  for (int k : s.k) t *= k == 1 ? 1 + std::log(double(N) * s.a) : double(k) / (k - 1);
  return t;
}

// Sum over n_1 < ... < n_d <= N of prod eps_j^{n_j} (a n_j + b)^{-k_j}; also
// H_{d-1}(N). Long double with Kahan-compensated running sums.
NestedOut nested_ld(const NestedSpec& s, long N) {
  const int d = static_cast<int>(s.k.size());
  int kmax = 1;
  for (int k : s.k) kmax = std::max(kmax, k);
  std::vector<long double> H(d + 1, 0.0L), C(d + 1, 0.0L), pw(kmax + 1);
  H[0] = 1;
  for (long n = 1; n <= N; ++n) {
    const long double inv = 1.0L / static_cast<long double>(s.a * n + s.b);
    pw[0] = 1;
    for (int q = 1; q <= kmax; ++q) pw[q] = pw[q - 1] * inv;
    for (int j = d; j >= 1; --j) {
      long double c = pw[s.k[j - 1]];
      if (s.eps[j - 1] < 0 && (n & 1)) c = -c;
      // Kahan: H[j] += c * H[j-1]
      const long double y = c * H[j - 1] - C[j];
      const long double t = H[j] + y;
      C[j] = (t - H[j]) - y;
      H[j] = t;
    }
  }
  NestedOut o;
  mpfr_set_ld(o.S.get(), H[d], MPFR_RNDN);
  mpfr_set_ld(o.Hprev.get(), H[d - 1], MPFR_RNDN);
  const double eps = LDBL_EPSILON;
  o.round = errb::from_double(4 * nested_bound_total(s, N) * (d * (kmax + 8) * eps + 4.0 * N * eps * eps));
  return o;
}

NestedOut nested_mp(const NestedSpec& s, long N, mpfr_prec_t prec) {
  const int d = static_cast<int>(s.k.size());
  int kmax = 1;
  for (int k : s.k) kmax = std::max(kmax, k);
  std::vector<Real> H(d + 1, Real(prec)), pw(kmax + 1, Real(prec));
  Real t(prec);
  mpfr_set_ui(H[0].get(), 1, MPFR_RNDN);
  for (long n = 1; n <= N; ++n) {
    mpfr_set_si(pw[1].get(), s.a * n + s.b, MPFR_RNDN);
    mpfr_ui_div(pw[1].get(), 1, pw[1].get(), MPFR_RNDN);
    for (int q = 2; q <= kmax; ++q) mpfr_mul(pw[q].get(), pw[q - 1].get(), pw[1].get(), MPFR_RNDN);
    for (int j = d; j >= 1; --j) {
      mpfr_mul(t.get(), pw[s.k[j - 1]].get(), H[j - 1].get(), MPFR_RNDN);
      if (s.eps[j - 1] < 0 && (n & 1)) mpfr_sub(H[j].get(), H[j].get(), t.get(), MPFR_RNDN);
      else mpfr_add(H[j].get(), H[j].get(), t.get(), MPFR_RNDN);
    }
  }
  NestedOut o;
  o.S = H[d];
  o.Hprev = H[d - 1];
  Real r = errb::from_double(4 * nested_bound_total(s, N) * double(N) * d * (kmax + 4));
  mpfr_mul_2si(r.get(), r.get(), -static_cast<long>(prec), MPFR_RNDU);
  o.round = r;
  return o;
}

// Majorant of sum_{N<m<n} |h_{d-1}(m)| |c_d(n)| beyond the first-order tail
// correction: int_N^inf (1+ln x)^p x^-s dx times the constant factors.
double resid_bound(const NestedSpec& s, long N) {
  const int d = static_cast<int>(s.k.size());
  double cst = 1;
  int p = 0;
  for (int i = 0; i < d - 2; ++i) {
    if (s.k[i] == 1) ++p;
    else cst *= double(s.k[i]) / (s.k[i] - 1);
  }
  const int kd = s.k[d - 1], kd1 = s.k[d - 2];
  double sexp;
  if (s.eps[d - 1] > 0) {
    cst /= kd - 1;
    sexp = kd1 + kd - 1;
  } else {
    sexp = kd1 + kd;
  }
  // (1 + ln m) majorises inner harmonic-type partial sums for m >= 2
  const double L = 1 + std::log(double(N) * s.a);
  double sum = 0, fact = 1;
  for (int j = 0; j <= p; ++j) {
    if (j) fact *= p - j + 1;
    sum += fact * std::pow(L, p - j) / std::pow(sexp - 1, j + 1);
  }
  // 1% slack absorbs double rounding in this majorant
  return 1.01 * cst * std::pow(double(N), 1 - sexp) * sum;
}

// Tail sum_{n>N} eps^n (a n + b)^-k for a in {1,2}.
BigReal outer_tail(int k, int eps, long N, long a, long b, int digits) {
  if (a == 1 && b == 0 && eps > 0) return hurwitz_sum(k, Rational(N + 1), digits);
  if (a == 1 && b == 0) {
    // N even: pairs (2m-1, 2m), m > N/2
    BigReal d = hurwitz_diff(k, Rational(N / 2 + 1), Rational(2 * (N / 2) + 1, 2), digits);
    return d.scaled(pow2(-k));
  }
  if (a == 2 && b == -1 && eps > 0) return hurwitz_sum(k, Rational(2 * N + 1, 2), digits).scaled(pow2(-k));
  throw std::invalid_argument("outer_tail: unsupported series");
}

BigReal nested_eval(const NestedSpec& s, long N, int digits, bool use_ld) {
  const int d = static_cast<int>(s.k.size());
  const mpfr_prec_t prec = bits_for_digits(digits) + 32;
  NestedOut o = use_ld ? nested_ld(s, N) : nested_mp(s, N, prec);
  BigReal tail = outer_tail(s.k[d - 1], s.eps[d - 1], N, s.a, s.b, digits + 2);
  Real S(prec);
  mpfr_set(S.get(), o.S.get(), MPFR_RNDN);
  Real corr = o.Hprev * tail.value;
  S += corr;
  Real e = errb::add(o.round, errb::from_double(resid_bound(s, N)));
  e = errb::add(e, errb::mul(errb::from_real(o.Hprev), tail.err));
  e = errb::add(e, errb::mul(errb::from_real(tail.value), o.round));
  e = errb::add(e, errb::ulp_bound(S));
  return {std::move(S), std::move(e)};
}

}  // namespace

BigReal hurwitz_sum(int k, const Rational& a, int digits) { return hurwitz_impl(k, a, nullptr, digits); }

BigReal hurwitz_diff(int k, const Rational& a, const Rational& b, int digits) { return hurwitz_impl(k, a, &b, digits); }

BigReal oracle_eval(const SignedIndex& i, int digits, long N) {
  if (!i.convergent()) throw std::invalid_argument("oracle_eval: divergent index");
  const int d = i.depth();
  if (d > 3) throw std::invalid_argument("oracle_eval: depth > 3");
  if (d == 1) {
    const int k = i.parts[0].k;
    if (i.parts[0].eps > 0) return hurwitz_sum(k, 1, digits);
    return hurwitz_diff(k, 1, Rational(1, 2), digits).scaled(pow2(-k));
  }
  if (N % 2) ++N;
  NestedSpec s;
  for (const auto& p : i.parts) {
    s.k.push_back(p.k);
    s.eps.push_back(p.eps);
  }
  return nested_eval(s, N, digits, true);
}

BigReal eval_t(const std::vector<int>& parts, int digits) {
  if (parts.empty() || parts.back() < 2) throw std::invalid_argument("eval_t: divergent t value");
  for (int k : parts)
    if (k < 1) throw std::invalid_argument("eval_t: parts must be positive");
  if (parts.size() == 1) return hurwitz_sum(parts[0], Rational(1, 2), digits).scaled(pow2(-parts[0]));
  NestedSpec s;
  s.k = parts;
  s.eps.assign(parts.size(), 1);
  s.a = 2;
  s.b = -1;
  const double target = std::pow(10.0, -digits) / 4;
  long N = 1024;
  while (resid_bound(s, N) > target) {
    N *= 2;
    if (N > (1L << 22)) throw PrecisionError("eval_t: precision target unreachable within iteration cap");
  }
  const bool ld = digits <= 15;
  BigReal r = nested_eval(s, N, digits, ld);
  if (r.err.to_double() > 10 * target) throw PrecisionError("eval_t: rounding exceeds target");
  return r;
}

}  // namespace mzv
