#include "mzv/coaction.hpp"

#include <algorithm>
#include <stdexcept>

namespace mzv {

std::map<std::pair<BoundedWord, Word>, Rational> TensorSum::collect() const {
  std::map<std::pair<BoundedWord, Word>, Rational> out;
  for (const auto& t : terms) {
    auto& c = out[{t.left, t.right}];
    c += t.coeff;
    if (c == 0) out.erase({t.left, t.right});
  }
  return out;
}

TensorSum d_r_word(const Word& w, int r) {
  const int n = static_cast<int>(w.size());
  if (r < 1 || r > n) throw std::invalid_argument("d_r_word: need 1 <= r <= |w|");
  Word a;
  a.reserve(w.size() + 2);
  a.push_back(0);
  a.insert(a.end(), w.begin(), w.end());
  a.push_back(1);
  TensorSum out;
  out.r = r;
  out.n = n;
  for (int k = 0; k <= n - r; ++k) {
    if (a[k] == a[k + r + 1]) continue;
    TensorTerm t;
    t.left.begin = a[k];
    t.left.end = a[k + r + 1];
    t.left.inner.assign(a.begin() + k + 1, a.begin() + k + r + 1);
    t.right.assign(a.begin() + 1, a.begin() + k + 1);
    t.right.insert(t.right.end(), a.begin() + k + r + 1, a.begin() + n + 1);
    t.coeff = 1;
    out.terms.push_back(std::move(t));
  }
  return out;
}

namespace {

// I(0; w; 1) for a {0, +-1} word with endpoints already at (0; 1).
std::optional<LeftValue> recognise(const Word& w, const Rational& sign) {
  std::vector<int> nz;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) nz.push_back(static_cast<int>(i));
  if (nz.empty()) return LeftValue{0, {}};
  const int len = static_cast<int>(w.size());
  if (nz.size() == 1) {
    // I(0; 0^l, e, 0^{k-1}; 1) = -zeta_l(k; e) = -(-1)^l binom(k+l-1, l) zeta(k+l; e)
    const int l = nz[0], k = len - l;
    const Rational c = -sign * Rational(l % 2 ? -1 : 1) * binom(k + l - 1, l);
    return LeftValue{c, SignedIndex({Part{len, w[l]}})};
  }
  // 0,(1,0)^r = (-1)^r zeta_1({2}^r) = 2 zeta(2r+1)
  if (len % 2 == 1 && w[0] == 0) {
    bool ok = true;
    for (int i = 1; i < len && ok; ++i) ok = w[i] == (i % 2 ? 1 : 0);
    if (ok) return LeftValue{2 * sign, SignedIndex({Part{len, 1}})};
  }
  return std::nullopt;
}

std::optional<LeftValue> to_standard(Letter x, const Word& w, Letter y) {
  if (x == 0 && y == 1) return recognise(w, 1);
  if (x == 1 && y == 0) {
    // reversal first, then x -> 1 - x (which fixes the {0,1} alphabet only)
    if (auto v = recognise(Word(w.rbegin(), w.rend()), w.size() % 2 ? -1 : 1)) return v;
    Word v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == -1) return std::nullopt;
      v[i] = static_cast<Letter>(1 - w[i]);
    }
    return recognise(v, 1);
  }
  if (x == 0 && y == -1) {
    Word v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) v[i] = static_cast<Letter>(-w[i]);
    return recognise(v, 1);
  }
  if (x == -1 && y == 0) {
    Word v(w.rbegin(), w.rend());
    for (auto& c : v) c = static_cast<Letter>(-c);
    return recognise(v, w.size() % 2 ? -1 : 1);
  }
  return std::nullopt;
}

}  // namespace

std::optional<LeftValue> normalize_left_factor(const BoundedWord& left) {
  const Letter x = left.begin, y = left.end;
  if (x == y) return LeftValue{0, {}};
  if ((x == 1 && y == -1) || (x == -1 && y == 1)) {
    // path composition through 0, modulo products
    auto p = to_standard(x, left.inner, 0);
    auto q = to_standard(0, left.inner, y);
    if (!p || !q) return std::nullopt;
    if (p->c == 0) return q;
    if (q->c == 0) return p;
    if (p->index == q->index) return LeftValue{p->c + q->c, p->index};
    const int len = static_cast<int>(left.inner.size());
    if (len < 2) return std::nullopt;
    // fold bars into zeta(len), len >= 2
    auto unbar = [&](const LeftValue& v) {
      return v.index.parts[0].eps == 1 ? v.c : v.c * -(1 - pow2(1 - len));
    };
    return LeftValue{unbar(*p) + unbar(*q), SignedIndex({Part{len, 1}})};
  }
  return to_standard(x, left.inner, y);
}

namespace {

std::string describe(const BoundedWord& b) {
  return "I(" + std::to_string(b.begin) + "; " + format_word(b.inner) + "; " + std::to_string(b.end) + ")";
}

}  // namespace

LinComb d_odd_index(const SignedIndex& i, int r) {
  if (r < 1) throw std::invalid_argument("d_odd_index: r >= 1");
  const auto sw = index_to_word(i);
  const int len = 2 * r + 1;
  if (len > static_cast<int>(sw.word.size())) return {};
  LinComb out;
  for (const auto& [key, c] : d_r_word(sw.word, len).collect()) {
    const auto& [left, right] = key;
    const LinComb rv = right.empty() ? LinComb::constant(1) : lift_divergent_word(right);
    if (rv.is_zero()) continue;
    const auto lv = normalize_left_factor(left);
    if (!lv) throw std::domain_error("unsupported left factor " + describe(left) + " in D_" + std::to_string(len) + " " + format_index(i));
    if (lv->c == 0) continue;
    Rational coef = lv->c * c * sw.sign;
    if (lv->index.parts[0].eps == -1) coef *= -(1 - pow2(-2 * r));
    out.add(rv, coef);
  }
  return out;
}

LinComb d_odd_lincomb(const LinComb& x, int r) {
  LinComb out;
  for (const auto& [m, c] : x.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0 && m[i] == m[i - 1]) continue;
      // repeated factors contribute once per copy
      const auto copies = std::count(m.begin(), m.end(), m[i]);
      LinComb d = d_odd_index(m[i], r);
      if (d.is_zero()) continue;
      Monomial rest = m;
      rest.erase(rest.begin() + static_cast<long>(i));
      out.add(d * LinComb::mono(rest), c * Rational(copies));
    }
  }
  return out;
}

LinComb stuffle_linearize(const LinComb& x) {
  LinComb out;
  for (const auto& [m, c] : x.terms()) {
    IndexComb acc{{SignedIndex{}, 1}};
    for (const auto& f : m) {
      IndexComb next;
      for (const auto& [u, cu] : acc)
        for (const auto& [v, cv] : stuffle(u, f)) next[v] += cu * cv;
      acc = std::move(next);
    }
    for (const auto& [u, cu] : acc) {
      if (cu == 0) continue;
      if (u.depth() == 0) out.add(Monomial{}, c * cu);
      else out.add(Monomial{u}, c * cu);
    }
  }
  return out;
}

namespace {

// zeta^l({2}^a, 3, {2}^b) as a multiple of zeta^l(2a+2b+3)
Rational two_three_two(int a, int b) {
  const int n = 2 * a + 2 * b + 2;
  const Rational c = binom(n, 2 * a + 2) - (1 - pow2(-n)) * binom(n, 2 * b + 1);
  return 2 * Rational((a + b + 1) % 2 ? -1 : 1) * c;
}

Rational project_index(const SignedIndex& i) {
  if (i.lead_zeros) throw std::domain_error("pi_projection: unexpanded lead zeros");
  if (i.depth() == 1) {
    const auto [k, e] = i.parts[0];
    if (k == 1) {
      if (e == -1) throw std::domain_error("pi_projection: weight-1 alternating value");
      return 0;
    }
    if (k % 2 == 0) return 0;
    return e == 1 ? Rational(1) : -(1 - pow2(1 - k));
  }
  int threes = 0, pos = -1;
  for (int j = 0; j < i.depth(); ++j) {
    const auto& p = i.parts[j];
    if (p.eps != 1 || (p.k != 2 && p.k != 3)) throw std::domain_error("pi_projection: unsupported " + format_index(i));
    if (p.k == 3) ++threes, pos = j;
  }
  if (threes != 1) throw std::domain_error("pi_projection: unsupported " + format_index(i));
  return two_three_two(pos, i.depth() - 1 - pos);
}

}  // namespace

Rational pi_projection(const LinComb& right) {
  Rational s;
  for (const auto& [m, c] : right.terms())
    if (m.size() == 1) s += c * project_index(m[0]);
  return s;
}

}  // namespace mzv
