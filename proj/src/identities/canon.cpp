#include "mzv/canon.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace mzv {

Rational even_zeta_coeff(int k) {
  // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), pi^2 = 6 zeta(2)
  Rational v = bernoulli(2 * k) * pow2(2 * k) / (2 * Rational(factorial(2 * k)));
  if (k % 2 == 0) v = -v;
  Rational six = 1;
  for (int i = 0; i < k; ++i) six *= 6;
  return v * six;
}

LinComb pi_power_lc(int k) {
  Rational six = 1;
  for (int i = 0; i < k; ++i) six *= 6;
  return LinComb::mono(Monomial(static_cast<std::size_t>(k), idx({2})), six);
}

LinComb canon_single(int n, int eps) {
  if (n < 1) throw std::invalid_argument("canon_single: n >= 1 required");
  if (eps < 0) {
    if (n == 1) return LinComb::single(idx({-1}));
    return canon_single(n, 1) * Rational(-(1 - pow2(1 - n)));
  }
  if (n == 1) return {};
  if (n % 2 == 0) return LinComb::mono(Monomial(static_cast<std::size_t>(n / 2), idx({2})), even_zeta_coeff(n / 2));
  return LinComb::single(idx({n}));
}

namespace {

SignedIndex two(int a, int e, int b, int f) { return SignedIndex({{a, e}, {b, f}}); }

bool divergent(const SignedIndex& i) { return !i.convergent(); }

// Row of the relation system: sum_j v[j] atom_j + c = 0.
struct Row {
  std::map<int, Rational> v;
  LinComb c;
};

LinComb canon_impl(const LinComb& x);

DepthTwoReduction build_reduction(int w) {
  std::vector<SignedIndex> atoms;
  for (int a = 1; a < w; ++a)
    for (int e : {1, -1})
      for (int f : {1, -1})
        if (!(w - a == 1 && f == 1)) atoms.push_back(two(a, e, w - a, f));
  // alternating atoms first so that free atoms are classical where possible
  std::stable_sort(atoms.begin(), atoms.end(), [](const SignedIndex& x, const SignedIndex& y) {
    const int cx = x.classical() ? 1 : 0, cy = y.classical() ? 1 : 0;
    if (cx != cy) return cx < cy;
    return x < y;
  });
  std::map<SignedIndex, int> col;
  for (std::size_t j = 0; j < atoms.size(); ++j) col[atoms[j]] = static_cast<int>(j);

  auto split = [&](const LinComb& lc) {
    Row r;
    for (const auto& [m, c] : lc.terms()) {
      if (m.size() == 1 && m[0].depth() == 2) {
        if (divergent(m[0])) continue;  // cancels between the two products
        r.v[col.at(m[0])] += c;
      } else {
        r.c.add(canon_impl(LinComb::mono(m, c)));
      }
    }
    for (auto it = r.v.begin(); it != r.v.end();)
      it = it->second == 0 ? r.v.erase(it) : std::next(it);
    return r;
  };

  auto sreg = [](int x, int e) {
    // stuffle-regularised zeta(x^e, 1) at T = 0
    if (x == 1 && e == 1) return canon_single(2, 1) * Rational(-1, 2);
    LinComb r = LinComb::single(two(1, 1, x, e), -1);
    r.add(canon_single(x + 1, e), -1);
    return r;
  };

  std::vector<Row> rows;
  for (int a = 1; a < w; ++a) {
    const int b = w - a;
    for (int e : {1, -1}) {
      for (int f : {1, -1}) {
        if (a == 1 && e == 1 && b == 1 && f == 1) continue;
        LinComb st;
        st.add({two(a, e, b, f)}, 1);
        st.add({two(b, f, a, e)}, 1);
        st.add({SignedIndex({{a + b, e * f}})}, 1);
        LinComb st_conv;
        for (const auto& [m, c] : st.terms())
          if (m[0].convergent()) st_conv.add(m, c);
        const auto u = index_to_word(SignedIndex({{a, e}}));
        const auto v = index_to_word(SignedIndex({{b, f}}));
        LinComb sh;
        for (const auto& [ww, c] : shuffle(u.word, v.word)) {
          if (ww.back() == 1) continue;
          const auto si = word_to_index(ww);
          sh.add({si.index}, c * u.sign * v.sign * si.sign);
        }
        rows.push_back(split(st_conv - sh));
        const bool div = (a == 1 && e == 1) || (b == 1 && f == 1);
        if (!div) {
          Row r = split(st_conv);
          r.c.add(canon_single(a, e) * canon_single(b, f), -1);
          rows.push_back(std::move(r));
        }
      }
    }
    if (b == 1) {
      // regularised distribution relation
      LinComb lc = sreg(a, 1) + sreg(a, -1);
      lc.add({two(a, 1, 1, -1)}, 1);
      lc.add({two(a, -1, 1, -1)}, 1);
      const LinComb l2 = canon_single(1, -1) * Rational(-1);
      LinComb p;
      if (a > 1) p = sreg(a, 1) - l2 * canon_single(a, 1);
      else p = sreg(1, 1) + l2 * l2 * Rational(1, 2);
      lc.add(p, -pow2(1 - a));
      rows.push_back(split(lc));
    } else {
      LinComb lc;
      for (int e : {1, -1})
        for (int f : {1, -1}) lc.add({two(a, e, b, f)}, 1);
      lc.add({two(a, 1, b, 1)}, -pow2(2 - a - b));
      rows.push_back(split(lc));
    }
  }

  // Gauss-Jordan over columns in atom order
  std::map<int, Row> piv;
  auto eliminate = [](Row& target, const Row& p, int j) {
    auto it = target.v.find(j);
    if (it == target.v.end()) return;
    const Rational t = it->second;
    for (const auto& [k, x] : p.v) {
      Rational& y = target.v[k];
      y -= t * x;
      if (y == 0) target.v.erase(k);
    }
    target.c.add(p.c, -t);
  };
  for (int j = 0; j < static_cast<int>(atoms.size()); ++j) {
    auto it = std::find_if(rows.begin(), rows.end(), [j](const Row& r) { return r.v.count(j) > 0; });
    if (it == rows.end()) continue;
    Row p = std::move(*it);
    rows.erase(it);
    const Rational inv = 1 / p.v.at(j);
    for (auto& [k, x] : p.v) x *= inv;
    p.c *= inv;
    for (auto& r : rows) eliminate(r, p, j);
    for (auto& [jj, r] : piv) eliminate(r, p, j);
    piv.emplace(j, std::move(p));
  }

  DepthTwoReduction out;
  for (const auto& r : rows)
    if (r.v.empty() && !r.c.is_zero()) ++out.inconsistent;
  for (int j = 0; j < static_cast<int>(atoms.size()); ++j) {
    auto it = piv.find(j);
    if (it == piv.end()) {
      out.free.push_back(atoms[j]);
      out.red.emplace(atoms[j], LinComb::single(atoms[j]));
      continue;
    }
    LinComb lc = it->second.c * Rational(-1);
    for (const auto& [k, x] : it->second.v)
      if (k != j) lc.add({atoms[k]}, -x);
    out.red.emplace(atoms[j], std::move(lc));
  }
  return out;
}

std::recursive_mutex g_red_mu;
std::map<int, std::unique_ptr<DepthTwoReduction>> g_red;

LinComb canon_factor(const SignedIndex& i) {
  if (i.lead_zeros != 0) throw std::invalid_argument("canon: lead_zeros must be expanded first");
  if (i.depth() == 1) return canon_single(i.parts[0].k, i.parts[0].eps);
  if (i.depth() == 2) {
    if (!i.convergent()) throw std::invalid_argument("canon: divergent index " + format_index(i));
    return depth_two_reduction(i.weight()).red.at(i);
  }
  return LinComb::single(i);
}

LinComb canon_impl(const LinComb& x) {
  LinComb r;
  for (const auto& [m, c] : x.terms()) {
    LinComb t = LinComb::constant(c);
    for (const auto& i : m) t = t * canon_factor(i);
    r += t;
  }
  return r;
}

}  // namespace

const DepthTwoReduction& depth_two_reduction(int weight) {
  if (weight < 2) throw std::invalid_argument("depth_two_reduction: weight >= 2 required");
  std::lock_guard lk(g_red_mu);
  auto it = g_red.find(weight);
  if (it == g_red.end()) it = g_red.emplace(weight, std::make_unique<DepthTwoReduction>(build_reduction(weight))).first;
  return *it->second;
}

LinComb canon(const LinComb& x) { return canon_impl(x); }

bool exact_equal(const LinComb& a, const LinComb& b) { return canon(a - b).is_zero(); }

LinComb drop_products(const LinComb& x) {
  LinComb r;
  for (const auto& [m, c] : x.terms()) {
    if (m.size() != 1) continue;
    if (m[0].depth() == 1 && m[0].parts[0].k % 2 == 0) continue;
    r.add(m, c);
  }
  return r;
}

}  // namespace mzv
