#include "mzv/identities.hpp"

#include <functional>
#include <stdexcept>

namespace mzv {

namespace {

// zeta(n^eps) at stuffle parameter T, zeta(0) = zeta(0bar) = -1/2
LinComb zsT(int n, int eps, const Rational& T) {
  if (n == 0) return LinComb::constant(Rational(-1, 2));
  if (n == 1 && eps == 1) return LinComb::constant(T);
  return LinComb::single(SignedIndex({{n, eps}}));
}

}  // namespace

LinComb zs(int n) { return zsT(n, 1, 0); }
LinComb zb(int n) { return zsT(n, -1, 0); }
LinComb zl(std::initializer_list<int> ks) { return LinComb::single(idx(ks)); }

LinComb dz_reg(Part x, Part y, const Rational& T) {
  if (!(y.k == 1 && y.eps == 1)) return LinComb::single(SignedIndex({x, y}));
  if (x.k == 1 && x.eps == 1) {
    LinComb r = LinComb::constant(T * T / 2);
    r.add(zs(2), Rational(-1, 2));
    return r;
  }
  LinComb r = zsT(x.k, x.eps, T) * T;
  r.add(LinComb::single(SignedIndex({{1, 1}, x})), -1);
  r.add(zsT(x.k + 1, x.eps, T), -1);
  return r;
}

LinComb shreg(const std::vector<Part>& parts, int l) {
  const int d = static_cast<int>(parts.size());
  if (d == 0) throw std::invalid_argument("shreg: empty index");
  LinComb r;
  std::vector<Part> cur(parts);
  std::function<void(int, int, Rational)> rec = [&](int j, int left, Rational c) {
    if (j == d - 1) {
      cur[j].k = parts[j].k + left;
      c *= binom(parts[j].k + left - 1, left);
      if (d == 1) r.add(zsT(cur[0].k, cur[0].eps, 0), c);
      else if (d == 2) r.add(dz_reg(cur[0], cur[1]), c);
      else r.add(LinComb::single(SignedIndex(cur)), c);
      return;
    }
    for (int i = 0; i <= left; ++i) {
      cur[j].k = parts[j].k + i;
      rec(j + 1, left - i, c * binom(parts[j].k + i - 1, i));
    }
  };
  rec(0, l, l % 2 ? Rational(-1) : Rational(1));
  return r;
}

LinComb zeta_two_blocks(int n) {
  if (n < 0) throw std::invalid_argument("zeta_two_blocks: n >= 0");
  return pi_power_lc(n) * Rational(1, factorial(2 * n + 1));
}

LinComb zetastar_two_blocks(int n) {
  if (n < 0) throw std::invalid_argument("zetastar_two_blocks: n >= 0");
  if (n == 0) return LinComb::constant(1);
  // pi x / sin(pi x) = sum_n (-1)^{n+1} (2^{2n} - 2) B_{2n} (pi x)^{2n} / (2n)!
  Rational c = (pow2(2 * n) - 2) * bernoulli(2 * n) / Rational(factorial(2 * n));
  if (n % 2 == 0) c = -c;
  return pi_power_lc(n) * c;
}

LinComb zetastar_223(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("zetastar_223: a, b >= 0");
  LinComb r;
  for (int s = 1; s <= a + b + 1; ++s) {
    Rational c = binom(2 * s, 2 * a) - (s == a ? 1 : 0) - (1 - pow2(-2 * s)) * binom(2 * s, 2 * b + 1);
    if (c == 0) continue;
    r.add(zetastar_two_blocks(a + b + 1 - s) * zs(2 * s + 1), -2 * c);
  }
  return r;
}

SignedIndex index_2242(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("index_2242: a, b >= 0");
  std::vector<int> ks(static_cast<std::size_t>(a), 2);
  ks.push_back(4);
  ks.insert(ks.end(), static_cast<std::size_t>(b), 2);
  return idx_from(ks);
}

}  // namespace mzv
