#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

namespace {

int sgn(int e) { return e % 2 ? -1 : 1; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

IdentityInstance make_t(std::string id, std::vector<int> params, std::vector<int> t, LinComb rhs) {
  IdentityInstance r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.lhs = t_from_alternating(t);
  r.t_lhs = std::move(t);
  r.rhs = std::move(rhs);
  return r;
}

}  // namespace

LinComb t_from_alternating(const std::vector<int>& parts) {
  require(!parts.empty(), "t: empty argument");
  for (int k : parts) require(k >= 1, "t: parts must be positive");
  require(parts.back() >= 2, "t: divergent argument");
  const int d = static_cast<int>(parts.size());
  LinComb r;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    SignedIndex i;
    int sign = 1;
    for (int j = 0; j < d; ++j) {
      const int e = (mask >> j & 1) ? -1 : 1;
      sign *= e;
      i.parts.push_back({parts[j], e});
    }
    r.add({i}, Rational(sign) * pow2(-d));
  }
  return r;
}

LinComb t_single(int a) {
  require(a >= 2, "t: divergent argument");
  return zs(a) * (1 - pow2(-a));
}

IdentityInstance t_expand(const std::vector<int>& parts) {
  require(parts.size() == 2, "t-expand: depth 2 arguments (a, b)");
  const int a = parts[0], b = parts[1];
  require(a >= 1 && b >= 2, "t-expand: a >= 1, b >= 2");
  // t(a,b) = zeta(abar,bbar)/2 + zeta(a,b)/2 - 2^{-a-b} zeta(a,b)
  LinComb rhs = zl({-a, -b}) * Rational(1, 2);
  rhs.add(zl({a, b}), Rational(1, 2) - pow2(-a - b));
  return make_t("t-expand", {a, b}, parts, rhs);
}

IdentityInstance t_even_even(int k, int l) {
  require(k >= 1 && l >= 1, "t-even-even: k, l >= 1");
  const int W = 2 * k + 2 * l;
  LinComb rhs;
  for (int i = 2; i <= W - 2; ++i) {
    rhs.add(zl({W - i, i}), binom(i - 1, 2 * k - 1) * pow2(-i - 1));
    rhs.add(zl({i, W - i}), binom(i - 1, 2 * l - 1) * pow2(-i - 1));
  }
  rhs.add(zl({2 * l, 2 * k}), -pow2(-W));
  for (int r = 2; r <= W - 2; ++r) rhs.add(zs(r) * zs(W - r), -sgn(r + 1) * pow2(-r - 1) * binom(r - 1, 2 * k - 1));
  rhs.add(zs(W), -pow2(-W - 1) * (2 * binom(W - 2, 2 * k - 1) + binom(W - 1, 2 * k - 1)));
  return make_t("t-even-even", {k, l}, {2 * l, 2 * k}, rhs);
}

IdentityInstance t_odd_even(int a, int b) {
  require(a >= 1 && b >= 1, "t-odd-even: a, b >= 1");
  const int n = 2 * a + 2 * b;
  LinComb rhs = t_single(2 * a + 1) * t_single(2 * b);
  rhs.add(t_single(n + 1), Rational(-1, 2));
  for (int s = 1; s <= a + b; ++s) {
    const Rational c = binom(n - 2 * s, 2 * a) + binom(n - 2 * s, 2 * b - 1);
    if (c != 0) rhs.add(zs(n + 1 - 2 * s) * t_single(2 * s), -c * pow2(-(n + 1 - 2 * s)));
  }
  return make_t("t-odd-even", {a, b}, {2 * a + 1, 2 * b}, rhs);
}

IdentityInstance t_even_odd(int a, int b) {
  require(a >= 1 && b >= 1, "t-even-odd: a, b >= 1");
  const int n = 2 * a + 2 * b;
  LinComb rhs = t_single(n + 1) * Rational(-1, 2);
  for (int s = 1; s <= a + b; ++s) {
    const Rational c = binom(n - 2 * s, 2 * b) + binom(n - 2 * s, 2 * a - 1);
    if (c != 0) rhs.add(zs(n + 1 - 2 * s) * t_single(2 * s), c * pow2(-(n + 1 - 2 * s)));
  }
  return make_t("t-even-odd", {a, b}, {2 * a, 2 * b + 1}, rhs);
}

IdentityInstance t39_testvector() {
  LinComb rhs;
  rhs.add(zl({1, 1, 4, 6}), Rational(9, 128));
  rhs.add(zl({3, 9}), Rational(1305, 4096));
  rhs.add(zs(2) * zl({3, 7}), Rational(-27, 128));
  rhs.add(zs(4) * zl({3, 5}), Rational(-27, 256));
  rhs.add(zs(9) * zs(3), Rational(3131, 2048));
  rhs.add(zs(5) * zs(7), Rational(-321, 1024));
  rhs.add(zs(3) * zs(3) * zs(3) * zs(3), Rational(-3, 512));
  rhs.add(zs(2) * zs(7) * zs(3), Rational(-45, 64));
  rhs.add(zs(2) * zs(5) * zs(5), Rational(-63, 256));
  rhs.add(zs(4) * zs(5) * zs(3), Rational(9, 256));
  rhs.add(zs(6) * zs(3) * zs(3), Rational(81, 512));
  rhs.add(zs(12), Rational(353139, 5660672));
  return make_t("t39", {}, {3, 9}, rhs);
}

}  // namespace mzv
