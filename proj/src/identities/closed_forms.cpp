#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

namespace {

int sgn(int e) { return e % 2 ? -1 : 1; }

LinComb dz(int a, int b) { return zl({a, b}); }

// (i pi)^{2m}
LinComb ipi(int m) { return pi_power_lc(m) * Rational(sgn(m)); }
// (i pi / 2)^{2m}
LinComb ipi2(int m) { return pi_power_lc(m) * (sgn(m) * pow2(-2 * m)); }
// (i pi)^{2q} / (2q+1)!
LinComb Pq(int q) { return ipi(q) * Rational(1, factorial(2 * q + 1)); }

Rational Ez(int n) { return Rational(euler_number(n)); }

Rational EE(int i, int j, int p, int q) {
  return sgn(p) * Ez(i + p) * Ez(j + q) /
         Rational(factorial(i) * factorial(j) * factorial(p) * factorial(q));
}

}  // namespace

LinComb zetastar_2242_rhs(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("zetastar-2242: a, b >= 0");
  LinComb r;
  for (int p = 0; p <= a; ++p) r.add(zb(2 * (a - p)) * dz(2 * b + 2, 2 * p + 2), 8);
  if (a > 0)
    for (int rr = 0; rr <= b; ++rr) r.add(zb(2 * (b - rr)) * dz(2 * a + 1, 2 * rr + 3), -8);
  for (int u = 0; u <= a + b; ++u)
    for (int i = 0; i <= 2 * a + 2 * b - 2 * u; ++i) {
      const int j = 2 * a + 2 * b - 2 * u - i;
      Rational c = binom(i + 1, 2 * b + 1) * pow2(-i);
      if (2 * a + 1 - 2 * u >= 0) c += binom(j + 1, 2 * a + 1 - 2 * u) * pow2(-j);
      r.add(zb(2 * u) * dz(i + 2, j + 2), -2 * c);
    }
  if (b >= 1)
    for (int p = 0; p <= a; ++p) {
      const int q = a - p;
      for (int rr = 0; rr <= b - 1; ++rr) {
        const int s = b - 1 - rr;
        LinComb inner = zs(2 * q + 2 * s + 3) * pow2(-(2 * q + 2 * s));
        inner.add(zb(2 * s + 2 * q + 3), -8);
        r.add(inner * zs(2 * rr + 3) * zb(2 * p), binom(2 + 2 * q + 2 * s, 1 + 2 * s));
      }
    }
  if (a >= 1)
    for (int u = 0; u <= a - 1; ++u)
      for (int v = 0; v <= a - 1 - u; ++v) {
        const int w = a - 1 - u - v;
        r.add(zs(2 * u + 3) * zb(2 * v) * zb(2 * b + 2 * w + 3), 8 * binom(2 * w + 2 * b + 2, 2 * b + 1));
      }
  if (a >= 2)
    for (int p = 0; p <= a - 2; ++p) r.add(zs(2 * p + 3) * zs(2 * (a - 2 - p) + 3) * zb(2 * b + 2), -8);
  for (int rr = 0; rr <= b; ++rr) r.add(zs(2 * a + 1) * zs(2 * rr + 3) * zb(2 * (b - rr)), 8);
  if (a == 0 && b >= 1)
    for (int u = 0; u <= b - 1; ++u)
      for (int v = 0; v <= b - 1 - u; ++v) {
        const int w = b - 1 - u - v;
        r.add(zs(2 * u + 3) * zs(2 * v + 3) * zb(2 * w), 4);
      }
  if (a >= 1)
    for (int p = 0; p <= a - 1; ++p) {
      const int q = a - 1 - p;
      for (int rr = 0; rr <= b + 1; ++rr) {
        const int s = b + 1 - rr;
        r.add(zb(2 * rr) * zs(2 * p + 3) * zs(2 * q + 2 * s + 1), 8 * binom(2 * q + 2 * s, 2 * s));
      }
    }
  for (int u = 0; u <= b; ++u)
    for (int v = 0; v <= b - u; ++v) {
      const int w = b - u - v;
      r.add(zb(2 * u) * zs(2 * w + 3) * zs(2 * a + 2 * v + 1), -8 * binom(2 * a + 2 * v, 2 * v));
    }
  // Euler-number double sums: rational multiples of zeta(2) pi^{2m} and zeta(2) pi^{2m} zeta(2t+2)
  for (int i = 0; i <= 2 * a; ++i) {
    const int j = 2 * a - i;
    for (int rr = 0; rr <= 2 * b + 2; ++rr) {
      const Rational c = EE(i, j, rr, 2 * b + 2 - rr);
      if (c != 0) r.add(zs(2) * ipi2(a + b + 1), -3 * c);
    }
    for (int t = 0; t <= b; ++t)
      for (int rr = 0; rr <= 2 * b - 2 * t; ++rr) {
        const Rational c = EE(i, j, rr, 2 * b - 2 * t - rr);
        if (c != 0) r.add(zs(2) * ipi2(a + b - t) * zs(2 * t + 2), 3 * c);
      }
  }
  r.add(zb(2 * a + 2 * b + 4), 2);
  for (int p = 0; p <= a + 1; ++p)
    r.add(zs(2 * p + 2 * b + 2) * zb(2 * (a + 1 - p)), 4 * pow2(-(2 * p + 2 * b)) * binom(2 * p + 2 * b, 2 * b + 1));
  for (int u = 0; u <= a; ++u)
    for (int v = 0; v <= a - u; ++v) {
      const int w = a - u - v;
      r.add(zb(2 * w) * zs(2 * v + 2) * zb(2 * u + 2 * b + 2), 8 * binom(2 * u + 2 * b + 1, 2 * b + 1));
    }
  for (int rr = 0; rr <= b + 1; ++rr) {
    const int s = b + 1 - rr;
    r.add(zs(2 * a + 2 * rr + 2) * zb(2 * s),
          4 * (binom(2 * a + 2 * rr + 1, 2 * a + 1) - binom(2 * a + 2 * rr + 1, 2 * rr + 1)) - 4);
  }
  if (a == 0) {
    for (int u = 0; u <= b; ++u)
      for (int v = 0; v <= b - u; ++v) r.add(zs(2 * u + 2) * zs(2 * v + 2) * zb(2 * (b - u - v)), -4);
    for (int rr = 0; rr <= b + 1; ++rr) r.add(zs(2 * rr + 2) * zb(2 * (b + 1 - rr)), 8);
    r.add(zs(2) * zb(2 * b + 2), -8);
  }
  return r;
}

LinComb zeta_2242_rhs(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("zeta-2242: a, b >= 0");
  LinComb r;
  for (int p = 0; p <= a; ++p) r.add(dz(2 * p + 2, 2 * b + 2) * Pq(a - p), -4);
  if (b >= 1)
    for (int rr = 0; rr <= b - 1; ++rr) r.add(dz(2 * rr + 3, 2 * a + 3) * Pq(b - 1 - rr), 4);
  for (int u = 0; u <= a + b; ++u)
    for (int i = 0; i <= 2 * a + 2 * b - 2 * u; ++i) {
      const int j = 2 * a + 2 * b - 2 * u - i;
      Rational c = binom(j + 1, 2 * b + 1) * pow2(-j);
      if (2 * a - 2 * u + 1 >= 0) c += binom(i + 1, 2 * a - 2 * u + 1) * pow2(-i);
      r.add(dz(i + 2, j + 2) * Pq(u), c);
    }
  if (a >= 1)
    for (int u = 0; u <= a - 1; ++u)
      for (int v = 0; v <= a - 1 - u; ++v) {
        const int w = a - 1 - u - v;
        LinComb inner = zb(2 * b + 2 * w + 3);
        inner.add(zs(2 * b + 2 * w + 3), -pow2(-(2 * b + 2 * w + 3)));
        r.add(inner * zs(2 * v + 3) * Pq(u), 4 * binom(2 * w + 2 * b + 2, 2 * b + 1));
      }
  for (int p = 0; p <= a; ++p)
    for (int rr = 0; rr <= b; ++rr) {
      const int q = a - p, s = b - rr;
      if (s >= 1) r.add(zs(2 * rr + 3) * zb(2 * s + 2 * p + 1) * Pq(q), -4 * binom(2 * p + 2 * s, 2 * s - 1));
    }
  if (b >= 1)
    for (int u = 0; u <= b - 1; ++u)
      for (int v = 0; v <= b - 1 - u; ++v) {
        const int w = b - 1 - u - v;
        r.add(zs(2 * w + 3) * zs(2 * a + 2 * v + 3) * Pq(u), -4 * binom(2 * a + 2 * v + 2, 2 * v));
      }
  for (int p = 0; p <= a; ++p)
    for (int rr = 0; rr <= b; ++rr) {
      const int q = a - p, s = b - rr;
      r.add(zs(2 * p + 3) * zs(2 * q + 2 * rr + 1) * Pq(s), 4 * binom(2 * q + 2 * rr, 2 * rr));
    }
  if (a >= 1)
    for (int p = 0; p <= a - 1; ++p) r.add(zs(2 * p + 3) * zs(2 * (a - 1 - p) + 3) * Pq(b), -2);
  if (b >= 1)
    for (int rr = 0; rr <= b - 1; ++rr) r.add(zs(2 * a + 3) * zs(2 * rr + 3) * Pq(b - 1 - rr), -4);
  for (int k = 0; k <= a + 1; ++k)
    for (int i = 0; i <= 2 * a + 2 - 2 * k; ++i) {
      const int j = 2 * a + 2 - 2 * k - i;
      for (int rr = 0; rr <= b; ++rr)
        for (int p = 0; p <= 2 * b - 2 * rr; ++p) {
          const int q = 2 * b - 2 * rr - p;
          const Rational c = EE(i, j, p, q) * pow2(2 * k + 2 * rr) /
                             Rational(factorial(2 * k + 1) * factorial(2 * rr + 1));
          if (c != 0) r.add(zs(2) * ipi2(a + b + 1), -3 * c);
        }
    }
  for (int l = 0; l <= a; ++l)
    for (int k = 0; k <= a - l; ++k)
      for (int i = 0; i <= 2 * a - 2 * k - 2 * l; ++i) {
        const int j = 2 * a - 2 * k - 2 * l - i;
        for (int rr = 0; rr <= b; ++rr)
          for (int p = 0; p <= 2 * b - 2 * rr; ++p) {
            const int q = 2 * b - 2 * rr - p;
            const Rational c = EE(i, j, p, q) * pow2(2 * k + 2 * rr) /
                               Rational(factorial(2 * k + 1) * factorial(2 * rr + 1));
            if (c != 0) r.add(zs(2) * ipi2(a + b - l) * zs(2 * l + 2), 3 * c);
          }
      }
  r.add(ipi(a + b + 2), Rational(1, factorial(2 * a + 2 * b + 5)));
  r.add(zs(2 * b + 2) * ipi(a + 1), Rational(2) / Rational(factorial(2 * a + 3)));
  r.add(zs(2 * a + 4) * Pq(b), -4);
  for (int p = 0; p <= a + 1; ++p)
    r.add(zs(2 * p + 2 * b + 2) * Pq(a + 1 - p), -binom(2 * p + 2 * b, 2 * b + 1) * pow2(1 - 2 * p - 2 * b));
  for (int p = 0; p <= a; ++p)
    for (int rr = 0; rr <= b; ++rr)
      r.add(zb(2 * p + 2 * rr + 2) * zs(2 * (b - rr) + 2) * Pq(a - p), -4 * binom(2 * p + 2 * rr + 1, 2 * p + 1));
  for (int rr = 0; rr <= b; ++rr)
    r.add(zs(2 * a + 2 * rr + 4) * Pq(b - rr),
          2 * (binom(2 * a + 2 * rr + 3, 2 * a + 3) - binom(2 * a + 2 * rr + 3, 2 * rr + 1)) + 2);
  for (int p = 0; p <= a; ++p) r.add(zs(2 * p + 2) * zs(2 * (a - p) + 2) * Pq(b), 2);
  return r * Rational(sgn(a + b));
}

IdentityInstance zetastar_2242_closed(int a, int b) {
  IdentityInstance r;
  r.id = "zetastar-2242";
  r.params = {a, b};
  r.lhs = interp_expand(index_2242(a, b), 1);
  r.rhs = zetastar_2242_rhs(a, b);
  return r;
}

IdentityInstance zeta_2242_closed(int a, int b) {
  IdentityInstance r;
  r.id = "zeta-2242";
  r.params = {a, b};
  r.lhs = LinComb::single(index_2242(a, b));
  r.rhs = zeta_2242_rhs(a, b);
  return r;
}

LinComb zeta_2242_via_star(int a, int b) {
  LinComb r;
  for (int n = 0; n <= a; ++n)
    for (int m = 0; m <= b; ++m)
      r.add(zetastar_2242_rhs(m, n) * zeta_two_blocks(a - n) * zeta_two_blocks(b - m), sgn(m + n));
  return r;
}

LinComb z2242_mod_products(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("z2242-modprod: a, b >= 0");
  LinComb r;
  r.add(dz(2 * a + 2, 2 * b + 2), -4);
  r.add(dz(2 * b + 1, 2 * a + 3), 4);
  for (int i = 0; i <= 2 * a + 2 * b; ++i) {
    const int j = 2 * a + 2 * b - i;
    r.add(dz(i + 2, j + 2), binom(i + 1, 2 * a + 1) * pow2(-i) + binom(j + 1, 2 * b + 1) * pow2(-j));
  }
  return r * Rational(sgn(a + b));
}

IdentityInstance z2242_modprod(int a, int b) {
  IdentityInstance r;
  r.id = "z2242-modprod";
  r.params = {a, b};
  r.exact = true;
  r.lhs = drop_products(canon(zeta_2242_rhs(a, b)));
  r.rhs = drop_products(canon(z2242_mod_products(a, b)));
  return r;
}

}  // namespace mzv
