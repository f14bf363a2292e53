#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

namespace {

LinComb zT(int n, int eps, const Rational& T) {
  if (n == 0) return LinComb::constant(Rational(-1, 2));
  if (n == 1 && eps == 1) return LinComb::constant(T);
  return LinComb::single(SignedIndex({{n, eps}}));
}

Part P(int k, int eps = 1) { return {k, eps}; }

int sgn(int e) { return e % 2 ? -1 : 1; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

LinComb zetastar_2242_expanded(int a, int b) { return interp_expand(index_2242(a, b), 1); }

IdentityInstance make(std::string id, std::vector<int> params, LinComb lhs, LinComb rhs) {
  IdentityInstance r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

IdentityInstance stuffle_antipode_2242(int a, int b) {
  require(a >= 0 && b >= 0, "stuffle-antipode-2242: a, b >= 0");
  LinComb rhs;
  for (int n = 0; n <= a; ++n)
    for (int m = 0; m <= b; ++m)
      rhs.add(zetastar_2242_expanded(m, n) * zeta_two_blocks(a - n) * zeta_two_blocks(b - m), sgn(m + n));
  return make("stuffle-antipode-2242", {a, b}, LinComb::single(index_2242(a, b)), rhs);
}

IdentityInstance two_one_2242(int a, int b) {
  require(a >= 0 && b >= 0, "two-one-2242: a, b >= 0");
  LinComb rhs;
  rhs.add(zb(2 * a + 2 * b + 4), -2);
  rhs.add(LinComb::single(SignedIndex({P(2 * a + 1), P(2 * b + 3, -1)})), -4);
  rhs.add(LinComb::single(SignedIndex({P(2 * a + 2), P(2 * b + 2, -1)})), -4);
  rhs.add(LinComb::single(SignedIndex({P(2 * a + 1), P(1), P(2 * b + 2, -1)})), -8);
  return make("two-one-2242", {a, b}, zetastar_2242_expanded(a, b), rhs);
}

LinComb two_one_block_form(int a, int b) {
  return interp_expand(SignedIndex({P(2 * a + 1), P(1), P(2 * b + 2, -1)}), Rational(1, 2)) * Rational(-8);
}

LinComb parity_depth3(Part al, Part be, Part ga, const Rational& T) {
  const int A = al.k, B = be.k, C = ga.k;
  require(A >= 1 && B >= 1 && C >= 1, "parity3: parts >= 1");
  require((A + B + C) % 2 == 0, "parity3: weight must be even");
  require(!(C == 1 && ga.eps == 1), "parity3: gamma must not be 1");
  const int sg = al.eps * be.eps * ga.eps;
  LinComb r;
  // (1 - (-1)^{B+C}) zeta(alpha) zeta(beta, gamma) / 2
  if ((B + C) % 2) r.add(zT(A, al.eps, T) * dz_reg(be, ga, T));
  if (C % 2 == 0) r.add(dz_reg(be, al, T) * zT(C, ga.eps, T), -1);
  r.add(dz_reg({A + B, al.eps * be.eps}, ga, T), Rational(-1, 2));
  r.add(dz_reg({B + C, be.eps * ga.eps}, al, T), Rational(1, 2));
  for (int s = 0; 2 * s <= A; ++s)
    for (int mu = 0; mu <= A - 2 * s; ++mu) {
      const int nu = A - 2 * s - mu;
      const Rational c = sgn(B + C + mu + nu) * binom(-B, mu) * binom(-C, nu);
      r.add(zT(2 * s, sg, T) * dz_reg({B + mu, be.eps}, {C + nu, ga.eps}, T), c);
    }
  for (int s = 0; 2 * s <= B; ++s)
    for (int mu = 0; mu <= B - 2 * s; ++mu) {
      const int nu = B - 2 * s - mu;
      const Rational c = sgn(C + mu) * binom(-C, mu) * binom(-A, nu);
      r.add(zT(2 * s, sg, T) * zT(C + mu, ga.eps, T) * zT(A + nu, al.eps, T), c);
    }
  for (int s = 0; 2 * s <= C; ++s)
    for (int mu = 0; mu <= C - 2 * s; ++mu) {
      const int nu = C - 2 * s - mu;
      const Rational c = binom(-B, mu) * binom(-A, nu);
      r.add(zT(2 * s, sg, T) * dz_reg({B + mu, be.eps}, {A + nu, al.eps}, T), c);
    }
  return r;
}

IdentityInstance parity3(int a, int b) {
  require(a >= 0 && b >= 0, "parity3: a, b >= 0");
  const Part al{2 * a + 1, 1}, be{1, 1}, ga{2 * b + 2, -1};
  return make("parity3", {a, b}, LinComb::single(SignedIndex({al, be, ga})), parity_depth3(al, be, ga));
}

IdentityInstance zeta1_bar_reduction(int b) {
  require(b >= 0, "zeta1bar-red: b >= 0");
  LinComb rhs;
  for (int s = 0; s <= b; ++s) rhs.add(zb(2 * s) * zs(2 * b + 3 - 2 * s), -1);
  rhs.add(zb(2 * b + 3), Rational(2 * b + 1, 2));
  return make("zeta1bar-red", {b}, LinComb::single(SignedIndex({P(1), P(2 * b + 2, -1)})), rhs);
}

LinComb full_reduction_1_rhs(int a, int b, const Rational& T) {
  const Part one{1, 1};
  LinComb r;
  r.add(zT(2 * a + 2 * b + 4, -1, T), 2);
  r.add(dz_reg(one, P(2 * a + 1), T) * zT(2 * b + 2, -1, T), 8);
  r.add(zT(2 * a + 1, 1, T) * dz_reg(one, P(2 * b + 2, -1), T), -8);
  r.add(zT(2 * b + 3, -1, T) * zT(2 * a + 1, 1, T), 4 * (2 * b + 1));
  r.add(zT(2 * b + 2, -1, T) * zT(2 * a + 2, 1, T), -4 * (2 * a + 1));
  for (int s = 0; s <= a; ++s)
    for (int nu = 0; nu <= 2 * a + 1 - 2 * s; ++nu) {
      const int mu = 2 * a + 1 - 2 * s - nu;
      r.add(zT(2 * s, -1, T) * dz_reg(P(1 + mu), P(2 * b + 2 + nu, -1), T), 8 * binom(nu + 2 * b + 1, nu));
    }
  for (int s = 0; s <= b + 1; ++s)
    for (int nu = 0; nu <= 2 * b + 2 - 2 * s; ++nu) {
      const int mu = 2 * b + 2 - 2 * s - nu;
      r.add(zT(2 * s, -1, T) * dz_reg(P(1 + mu), P(2 * a + 1 + nu), T), -8 * binom(nu + 2 * a, nu));
    }
  return r;
}

IdentityInstance full_reduction_1(int a, int b) {
  require(a >= 0 && b >= 0, "full1: a, b >= 0");
  return make("full1", {a, b}, zetastar_2242_expanded(a, b), full_reduction_1_rhs(a, b));
}

IdentityInstance full_reduction_2(int a, int b) {
  require(a >= 0 && b >= 0, "full2: a, b >= 0");
  LinComb r;
  r.add(zb(2 * a + 2 * b + 4), 2);
  r.add(zb(2 * b + 2) * zs(2 * a + 2), -4 * (2 * a + 1));
  for (int k = 1; k <= b + 1; ++k) r.add(zs(2 * a + 1) * zs(2 * k + 1) * zb(2 * b + 2 - 2 * k), 8);
  for (int s = 0; s <= a; ++s) r.add(zb(2 * s) * shreg({P(1), P(2 * b + 2, -1)}, 2 * a + 1 - 2 * s), -8);
  for (int s = 0; s <= b; ++s) r.add(zb(2 * s) * shreg({P(1), P(2 * a + 1)}, 2 * b + 2 - 2 * s), -8);
  return make("full2", {a, b}, zetastar_2242_expanded(a, b), r);
}

IdentityInstance dihedral_even(int k, int l) {
  require(k >= 1 && l >= 1, "dihedral-even: k, l >= 1");
  const int W = 2 * k + 2 * l;
  LinComb lhs = shreg({P(1), P(2 * l, -1)}, 2 * k - 1);
  lhs.add(LinComb::single(idx({-2 * l, -2 * k})), -1);
  LinComb rhs = zb(W) * binom(W - 1, 2 * k - 1);
  for (int r = 1; r <= W - 2; ++r)
    rhs.add(zb(r) * zs(W - r), -(sgn(r) * binom(r - 1, 2 * k - 1) + binom(r - 1, 2 * l - 1)));
  return make("dihedral-even", {k, l}, lhs, rhs);
}

IdentityInstance dihedral_odd(int k, int l) {
  require(k >= 0 && l >= 0, "dihedral-odd: k, l >= 0");
  const int W = 2 * k + 2 * l + 2;
  LinComb lhs = shreg({P(1), P(2 * l + 1)}, 2 * k);
  lhs.add(dz_reg(P(2 * l + 1), P(2 * k + 1)), -1);
  LinComb rhs;
  // shuffle/stuffle correction, sign fixed by the T = 0 conventions of dz_reg
  if (k == 0 && l == 0) rhs.add(zs(2), 1);
  rhs.add(zs(W), -binom(W - 1, 2 * l + 1));
  for (int q = 1; q <= W - 2; ++q) rhs.add(zs(q) * zs(W - q), sgn(q) * binom(q - 1, 2 * k) + binom(q - 1, 2 * l));
  return make("dihedral-odd", {k, l}, lhs, rhs);
}

IdentityInstance generalized_doubling(int s, int t, int form) {
  require(s >= 1 && t >= 1 && !(s == 1 && t == 1), "gen-doubling: s, t >= 1, (s,t) != (1,1)");
  require(form == 1 || form == 2, "gen-doubling: form is 1 or 2");
  const int W = s + t;
  LinComb lhs, rhs;
  lhs.add(LinComb::single(SignedIndex({P(s, -1), P(t, -1)})));
  for (int i = 1; i <= s; ++i) rhs.add(dz_reg(P(i), P(W - i)), binom(W - i - 1, t - 1) * pow2(1 + i - W));
  for (int i = 1; i <= t; ++i) rhs.add(dz_reg(P(W - i), P(i)), binom(W - i - 1, s - 1) * pow2(1 + i - W));
  if (form == 1) {
    lhs.add(dz_reg(P(s), P(t)));
    for (int i = 1; i <= t; ++i) {
      rhs.add(dz_reg(P(W - i), P(i)), -binom(W - i - 1, s - 1));
      rhs.add(dz_reg(P(W - i, -1), P(i)), -binom(W - i - 1, s - 1));
    }
    rhs.add(zs(W), -binom(W - 1, s) * pow2(1 - W));
  } else {
    lhs.add(shreg({P(1), P(s, -1)}, t - 1), sgn(t));
    rhs.add(dz_reg(P(s), P(t)), -1);
    rhs.add(shreg({P(s), P(1)}, t - 1), sgn(t));
    for (int i = 1; i <= t; ++i) rhs.add(zb(W - i) * zs(i), -binom(W - i - 1, s - 1));
    rhs.add(zs(W), -binom(W - 1, s));
  }
  return make("gen-doubling", {s, t, form}, lhs, rhs);
}

IdentityInstance galois_descent_evbar(int k, int l) {
  require(k >= 1 && l >= 1, "galois-evbar: k, l >= 1");
  const int W = 2 * k + 2 * l;
  LinComb rhs;
  for (int i = 2; i <= W - 2; ++i) {
    rhs.add(zl({W - i, i}), binom(i - 1, 2 * k - 1) * pow2(-i));
    rhs.add(zl({i, W - i}), binom(i - 1, 2 * l - 1) * pow2(-i));
  }
  rhs.add(zl({2 * l, 2 * k}), -1);
  for (int r = 2; r <= W - 2; ++r) rhs.add(zs(r) * zs(W - r), binom(r - 1, 2 * k - 1) * pow2(-r) * sgn(r));
  rhs.add(zs(W), -pow2(-W) * (2 * binom(W - 2, 2 * k - 1) + binom(W - 1, 2 * k - 1)));
  return make("galois-evbar", {k, l}, zl({-2 * l, -2 * k}), rhs);
}

LinComb galois_descent_derived(int k, int l) {
  // doubling (form 2) minus dihedral-even: 2 zeta(2l bar, 2k bar) = R_doubling - R_dihedral
  const auto dbl = generalized_doubling(2 * l, 2 * k, 2);
  const auto dih = dihedral_even(k, l);
  return (dbl.rhs - dih.rhs) * Rational(1, 2);
}

}  // namespace mzv
