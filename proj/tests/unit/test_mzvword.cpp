#include "mzv/mzvword.hpp"

#include "../support/brute.hpp"

#include <algorithm>
#include <doctest.h>

using namespace mzv;

namespace {

LinComb L(std::initializer_list<int> ks, const Rational& c = 1) { return LinComb::single(idx(ks), c); }

Rational coefficient_sum(const WordComb& c) {
  Rational s;
  for (const auto& [w, q] : c) s += q;
  return s;
}

}  // namespace

TEST_CASE("index to word") {
  auto a = index_to_word(idx({2}));
  CHECK(a.sign == -1);
  CHECK(a.word == Word{1, 0});
  auto b = index_to_word(idx({-2, -2}));
  CHECK(b.sign == 1);
  CHECK(b.word == Word{1, 0, -1, 0});
  auto c = index_to_word(idx({1, -2}, 1));
  CHECK(c.sign == 1);
  CHECK(c.word == Word{0, -1, -1, 0});
}

TEST_CASE("word to index") {
  auto a = word_to_index({1, 0});
  CHECK(a.sign == -1);
  CHECK(a.index == idx({2}));
  auto b = word_to_index({1, 1, 0, 0});
  CHECK(b.sign == 1);
  CHECK(b.index == idx({1, 3}));
  auto c = word_to_index({0, 1, 0});
  CHECK(c.sign == -1);
  CHECK(c.index == idx({2}, 1));

  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Word w = testsupport::random_word(rng, 1 + t % 9, {0, 1, -1});
    if (std::all_of(w.begin(), w.end(), [](Letter x) { return x == 0; })) continue;
    const auto si = word_to_index(w);
    const auto back = index_to_word(si.index);
    CHECK(back.word == w);
    CHECK(back.sign == si.sign);
  }
}

TEST_CASE("text syntax round trip") {
  for (const auto& i : {idx({2}), idx({-2, 3}), idx({1, -2}, 1), idx({2, 2, 4, 2})})
    CHECK(parse_index(format_index(i)) == i);
  CHECK(parse_word(format_word({1, 0, -1, 0})) == Word{1, 0, -1, 0});
}

TEST_CASE("block decomposition") {
  for (int n = 0; n <= 5; ++n)
    for (int s = 0; s <= n; ++s) {
      std::vector<int> ks(n + 1, 2);
      ks[s] = 4;
      const Word w = index_to_word(idx_from(ks)).word;
      CHECK(block_decomposition(w) == std::vector<int>{2 * s + 3, 1, 2 * n - 2 * s + 2});
      CHECK(block_degree(w) == 2);
    }
  CHECK(block_decomposition({1, 0, 0}) == std::vector<int>{3, 2});
  CHECK(block_decomposition({1, 0, 0, 0}) == std::vector<int>{3, 1, 2});
  CHECK(block_degree({1, 0, 0}) == 1);
  CHECK(block_degree({1, 0}) == 0);
  // the block lengths partition 0w1
  std::mt19937 rng(8);
  for (int t = 0; t < 100; ++t) {
    const Word w = testsupport::random_word(rng, 1 + t % 12, {0, 1});
    const auto b = block_decomposition(w);
    int total = 0;
    for (int x : b) total += x;
    CHECK(total == static_cast<int>(w.size()) + 2);
    CHECK(block_degree(w) == static_cast<int>(b.size()) - 1);
  }
}

TEST_CASE("duality") {
  auto a = dual_word({1, 0, 0});
  CHECK(a.sign == -1);
  CHECK(a.word == Word{1, 1, 0});
  auto b = dual_word({1, 0});
  CHECK(b.sign == 1);
  CHECK(b.word == Word{1, 0});
  auto c = dual_word({1, 0, 0, 0});
  CHECK(c.sign == 1);
  CHECK(c.word == Word{1, 1, 1, 0});
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Word w = testsupport::random_convergent_word(rng, 2 + t % 8);
    const auto d = dual_word(w);
    CHECK(word_convergent(d.word));
    const auto dd = dual_word(d.word);
    CHECK(dd.word == w);
    CHECK(dd.sign * d.sign == 1);
  }
}

TEST_CASE("shuffle product") {
  const auto a = shuffle(Word{1, 0}, Word{1, 0});
  CHECK(a.size() == 2);
  CHECK(a.at({1, 0, 1, 0}) == 2);
  CHECK(a.at({1, 1, 0, 0}) == 4);
  const auto b = shuffle(Word{0}, Word{1, 0});
  CHECK(b.at({0, 1, 0}) == 1);
  CHECK(b.at({1, 0, 0}) == 2);
  const auto c = shuffle(Word{}, Word{1, 0, -1});
  CHECK(c.size() == 1);
  CHECK(c.at({1, 0, -1}) == 1);
  // binom(m+n, m) interleavings, commutative
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const Word u = testsupport::random_word(rng, 1 + t % 4, {0, 1, -1});
    const Word v = testsupport::random_word(rng, 1 + t % 5, {0, 1, -1});
    CHECK(coefficient_sum(shuffle(u, v)) == binom(u.size() + v.size(), u.size()));
    CHECK(shuffle(u, v) == shuffle(v, u));
  }
}

TEST_CASE("stuffle product") {
  const auto a = stuffle(idx({2}), idx({3}));
  CHECK(a.size() == 3);
  CHECK(a.at(idx({2, 3})) == 1);
  CHECK(a.at(idx({3, 2})) == 1);
  CHECK(a.at(idx({5})) == 1);
  const auto b = stuffle(idx({-2}), idx({-2}));
  CHECK(b.at(idx({-2, -2})) == 2);
  CHECK(b.at(idx({4})) == 1);
  const auto c = stuffle(idx({2}), idx({-2}));
  CHECK(c.at(idx({2, -2})) == 1);
  CHECK(c.at(idx({-2, 2})) == 1);
  CHECK(c.at(idx({-4})) == 1);
  CHECK(stuffle(idx({2, 3}), idx({-4})) == stuffle(idx({-4}), idx({2, 3})));
}

TEST_CASE("shuffle regularisation") {
  CHECK(shuffle_regularize(idx({2}, 1)) == L({3}, -2));
  CHECK(shuffle_regularize(idx({2, 3})) == L({2, 3}));
  CHECK(shuffle_regularize(idx({1, -2}, 1)) == -(L({2, -2}) + L({1, -3}, 2)));
  CHECK(lift_divergent_word({1}).is_zero());
  CHECK(lift_divergent_word({0}).is_zero());
  // I(0;0,1,0;1) = -zeta_1(2) = 2 zeta(3), and zeta(3) = -I(0;1,0,0;1)
  CHECK(lift_divergent_word({0, 1, 0}) == L({3}, 2));
  CHECK(lift_divergent_word({1, 0, 0}) == L({3}, -1));
  // regularised shuffle is still a homomorphism: I(0;0;1) I(0;1,0;1) = 0
  LinComb s;
  for (const auto& [w, c] : shuffle(Word{0}, Word{1, 0})) s.add(lift_divergent_word(w), c);
  CHECK(s.is_zero());
}

TEST_CASE("interpolated values") {
  const Rational r(1, 3);
  const LinComb e = interp_expand(idx({2, 3, 4}), r);
  CHECK(e == L({2, 3, 4}) + L({5, 4}, r) + L({2, 7}, r) + L({9}, r * r));
  CHECK(interp_expand(idx({2, 2}), 1) == L({2, 2}) + L({4}));
  CHECK(interp_expand(idx({2, -3, 2}), 0) == L({2, -3, 2}));
  CHECK(interp_expand(idx({-2, -3}), 1) == L({-2, -3}) + L({5}));
}
