#pragma once
// Test-only oracles shared by the unit and acceptance suites. Nothing here
// calls into the coaction module.

#include "mzv/coaction.hpp"
#include "mzv/numeval.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace mzv::testsupport {

using Term = std::pair<BoundedWord, Word>;

/// D_r by enumerating every r-subset of the positions of w as a bitmask and
/// keeping the contiguous ones.
inline std::map<Term, Rational> brute_dr(const Word& w, int r) {
  const int n = static_cast<int>(w.size());
  std::map<Term, Rational> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    int first = -1, last = -1;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        if (first < 0) first = i;
        last = i;
      }
    if (last - first + 1 != r) continue;
    const Letter before = first == 0 ? Letter(0) : w[first - 1];
    const Letter after = last == n - 1 ? Letter(1) : w[last + 1];
    if (before == after) continue;
    BoundedWord left{before, Word(), after};
    Word right;
    for (int i = 0; i < n; ++i) (mask >> i & 1u ? left.inner : right).push_back(w[i]);
    auto& c = out[{left, right}];
    c += 1;
    if (c == 0) out.erase({left, right});
  }
  return out;
}

/// Uniform random word over `alphabet` of the given length.
inline Word random_word(std::mt19937& rng, int len, const std::vector<Letter>& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Word w(len);
  for (auto& a : w) a = alphabet[pick(rng)];
  return w;
}

/// Random convergent {0,1} word: first letter 1, last letter 0.
inline Word random_convergent_word(std::mt19937& rng, int len) {
  Word w = random_word(rng, len, {0, 1});
  w.front() = 1;
  w.back() = 0;
  return w;
}

/// |a - b| + err_a + err_b <= tol, all bounds rounded upward.
inline bool within(const BigReal& a, const BigReal& b, const Real& tol) {
  const Real d = (a.value - b.value).abs();
  const Real bound = errb::add(errb::add(errb::from_real(d), errb::ulp_bound(d)), errb::add(a.err, b.err));
  return bound <= tol;
}

/// |a - b| <= err_a + err_b + slack: the two enclosures overlap.
inline bool overlap(const BigReal& a, const BigReal& b, const Real& slack) {
  const Real d = (a.value - b.value).abs();
  return d <= errb::add(errb::add(a.err, b.err), slack);
}

}  // namespace mzv::testsupport
