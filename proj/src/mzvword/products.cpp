#include "mzv/mzvword.hpp"

#include <functional>
#include <stdexcept>

namespace mzv {

WordComb shuffle(const Word& u, const Word& v) {
  const std::size_t n = u.size(), m = v.size();
  // table[i][j] = u[i:] sh v[j:], filled from the back
  std::vector<std::vector<WordComb>> table(n + 1, std::vector<WordComb>(m + 1));
  for (std::size_t i = n + 1; i-- > 0;)
    for (std::size_t j = m + 1; j-- > 0;) {
      WordComb& t = table[i][j];
      if (i == n) {
        t[Word(v.begin() + j, v.end())] = 1;
        continue;
      }
      if (j == m) {
        t[Word(u.begin() + i, u.end())] = 1;
        continue;
      }
      for (const auto& [w, c] : table[i + 1][j]) {
        Word x;
        x.reserve(w.size() + 1);
        x.push_back(u[i]);
        x.insert(x.end(), w.begin(), w.end());
        add_to(t, x, c);
      }
      for (const auto& [w, c] : table[i][j + 1]) {
        Word x;
        x.reserve(w.size() + 1);
        x.push_back(v[j]);
        x.insert(x.end(), w.begin(), w.end());
        add_to(t, x, c);
      }
    }
  return table[0][0];
}

WordComb shuffle(const WordComb& u, const WordComb& v) {
  WordComb r;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v)
      for (const auto& [w, c] : shuffle(a, b)) add_to(r, w, ca * cb * c);
  return r;
}

IndexComb stuffle(const SignedIndex& a, const SignedIndex& b) {
  if (a.lead_zeros || b.lead_zeros) throw std::invalid_argument("stuffle: lead_zeros must be 0");
  const auto& x = a.parts;
  const auto& y = b.parts;
  std::function<std::map<std::vector<Part>, Rational>(std::size_t, std::size_t)> rec =
      [&](std::size_t i, std::size_t j) {
        std::map<std::vector<Part>, Rational> out;
        if (i == x.size() || j == y.size()) {
          std::vector<Part> rest(i == x.size() ? y.begin() + j : x.begin() + i,
                                 i == x.size() ? y.end() : x.end());
          out[rest] = 1;
          return out;
        }
        auto prepend = [&](const Part& p, const std::map<std::vector<Part>, Rational>& tail) {
          for (const auto& [w, c] : tail) {
            std::vector<Part> v{p};
            v.insert(v.end(), w.begin(), w.end());
            out[v] += c;
          }
        };
        prepend(x[i], rec(i + 1, j));
        prepend(y[j], rec(i, j + 1));
        prepend(Part{x[i].k + y[j].k, x[i].eps * y[j].eps}, rec(i + 1, j + 1));
        return out;
      };
  IndexComb r;
  for (const auto& [p, c] : rec(0, 0))
    if (c != 0) r[SignedIndex(p)] += c;
  return r;
}

LinComb shuffle_regularize(const SignedIndex& i) {
  if (i.parts.empty()) throw std::invalid_argument("shuffle_regularize: empty index");
  if (i.parts.back().k == 1 && i.parts.back().eps == 1)
    throw std::invalid_argument("shuffle_regularize: divergent tail");
  const int l = i.lead_zeros, d = i.depth();
  LinComb r;
  std::vector<int> add(d, 0);
  // distribute l extra units over the d parts
  std::function<void(int, int, Rational)> rec = [&](int j, int left, Rational c) {
    if (j == d - 1) {
      add[j] = left;
      c *= binom(i.parts[j].k + left - 1, left);
      SignedIndex t;
      for (int q = 0; q < d; ++q) t.parts.push_back({i.parts[q].k + add[q], i.parts[q].eps});
      r.add({t}, c);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      add[j] = a;
      rec(j + 1, left - a, c * binom(i.parts[j].k + a - 1, a));
    }
  };
  rec(0, l, l % 2 ? Rational(-1) : Rational(1));
  return r;
}

namespace {

bool all_letters(const Word& w, Letter a) {
  for (Letter x : w)
    if (x != a) return false;
  return true;
}

// Regularised value of a word as a combination of convergent words (empty word = 1).
const WordComb& lift_words(const Word& w, std::map<Word, WordComb>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  WordComb out;
  if (w.empty()) {
    out[w] = 1;
  } else if (all_letters(w, 0) || all_letters(w, 1)) {
    // reg(0^a) = reg(1^b) = 0 at T=0
  } else if (w.back() == 1) {
    std::size_t b = 0;
    while (w[w.size() - 1 - b] == 1) ++b;
    const Word v(w.begin(), w.end() - static_cast<long>(b));  // nonempty, last letter != 1
    const Letter x = v.back();
    const Word vp(v.begin(), v.end() - 1);
    // (v'x) sh 1^b = sum_j (v' sh 1^{b-j}) x 1^j and reg(1^b) = 0
    for (std::size_t j = 0; j < b; ++j) {
      for (const auto& [u, c] : shuffle(vp, Word(b - j, 1))) {
        Word t = u;
        t.push_back(x);
        t.insert(t.end(), j, 1);
        for (const auto& [z, cz] : lift_words(t, memo)) add_to(out, z, -c * cz);
      }
    }
  } else if (w.front() == 0) {
    std::size_t a = 0;
    while (w[a] == 0) ++a;
    const Letter y = w[a];
    const Word rest(w.begin() + static_cast<long>(a) + 1, w.end());
    // 0^a sh (y v'') = sum_j 0^j y (0^{a-j} sh v'') and reg(0^a) = 0
    for (std::size_t j = 0; j < a; ++j) {
      for (const auto& [u, c] : shuffle(Word(a - j, 0), rest)) {
        Word t(j, 0);
        t.push_back(y);
        t.insert(t.end(), u.begin(), u.end());
        for (const auto& [z, cz] : lift_words(t, memo)) add_to(out, z, -c * cz);
      }
    }
  } else {
    out[w] = 1;
  }
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace

LinComb words_to_lincomb(const WordComb& wc) {
  LinComb r;
  for (const auto& [w, c] : wc) {
    if (w.empty()) {
      r.add(Monomial{}, c);
      continue;
    }
    if (!word_convergent(w)) throw std::invalid_argument("words_to_lincomb: divergent word " + format_word(w));
    auto si = word_to_index(w);
    r.add({si.index}, c * si.sign);
  }
  return r;
}

LinComb lift_divergent_word(const Word& w) {
  std::map<Word, WordComb> memo;
  return words_to_lincomb(lift_words(w, memo));
}

LinComb lift_index(const SignedIndex& i) {
  if (i.convergent()) return LinComb::single(i);
  auto sw = index_to_word(i);
  return lift_divergent_word(sw.word) * Rational(sw.sign);
}

LinComb interp_expand(const SignedIndex& i, const Rational& r) {
  if (i.lead_zeros) throw std::invalid_argument("interp_expand: lead_zeros must be 0");
  LinComb out;
  const int d = i.depth();
  if (d == 0) return LinComb::constant(1);
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    // bit j set: merge part j+1 into the running part
    SignedIndex t;
    t.parts.push_back(i.parts[0]);
    int merges = 0;
    for (int j = 1; j < d; ++j) {
      if (mask >> (j - 1) & 1) {
        t.parts.back().k += i.parts[j].k;
        t.parts.back().eps *= i.parts[j].eps;
        ++merges;
      } else {
        t.parts.push_back(i.parts[j]);
      }
    }
    if (!t.convergent()) throw std::invalid_argument("interp_expand: divergent term " + format_index(t));
    out.add({t}, rpow(r, merges));
  }
  return out;
}

}  // namespace mzv
