#include "mzv/coaction.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace mzv;

namespace {

LinComb L(std::initializer_list<int> ks, const Rational& c = 1) { return LinComb::single(idx(ks), c); }

}  // namespace

TEST_CASE("d_r_word against subset enumeration") {
  std::mt19937 rng(23);
  for (int t = 0; t < 200; ++t) {
    const int len = 2 + t % 9;
    const Word w = testsupport::random_word(rng, len, t % 3 ? std::vector<Letter>{0, 1} : std::vector<Letter>{0, 1, -1});
    for (int r = 1; r <= len; ++r) CHECK(d_r_word(w, r).collect() == testsupport::brute_dr(w, r));
  }
  CHECK_THROWS_AS(d_r_word({1, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(d_r_word({1, 0}, 3), std::invalid_argument);
}

TEST_CASE("left factor normalisation") {
  const auto zeros = normalize_left_factor({0, {0, 0}, 1});
  REQUIRE(zeros);
  CHECK(zeros->c == 0);
  // I(0; 1,0,0; 1) = -zeta(3)
  const auto z3 = normalize_left_factor({0, {1, 0, 0}, 1});
  REQUIRE(z3);
  CHECK(z3->c == -1);
  CHECK(z3->index == idx({3}));
  // I(0; 0,(1,0)^r; 1) = 2 zeta(2r+1)
  for (int r = 1; r <= 4; ++r) {
    Word w{0};
    for (int i = 0; i < r; ++i) w.insert(w.end(), {1, 0});
    const auto v = normalize_left_factor({0, w, 1});
    REQUIRE(v);
    CHECK(v->c == 2);
    CHECK(v->index == idx({2 * r + 1}));
  }
  // reversal: I(1; w; 0) = (-1)^|w| I(0; reverse w; 1)
  const auto rev = normalize_left_factor({1, {0, 0, 1}, 0});
  REQUIRE(rev);
  CHECK(rev->c == 1);
  CHECK(rev->index == idx({3}));
  // depth two shapes are outside the table
  CHECK_FALSE(normalize_left_factor({0, {1, 0, 1, 0, 0}, 1}).has_value());
}

TEST_CASE("odd coaction of small values") {
  // idx({2,4}) is the double zeta with outer argument 4: zeta(3)^2 - 4 pi^6/2835
  CHECK(d_odd_index(idx({2, 4}), 1) == L({3}, 2));
  CHECK(d_odd_index(idx({5}), 2) == LinComb::constant(1));
  CHECK(d_odd_index(idx({5}), 1).is_zero());
  CHECK(d_odd_lincomb(L({3}) * L({5}), 1) == L({5}));
  CHECK(d_odd_lincomb(L({3}) * L({3}), 1) == L({3}, 2));
  CHECK(pi_projection(L({7}, 3)) == 3);
  CHECK(pi_projection(L({3}) * L({5})) == 0);
  const LinComb s = stuffle_linearize(L({2}) * L({3}));
  CHECK(s == L({2, 3}) + L({3, 2}) + L({5}));
}

TEST_CASE("family certificates") {
  for (const auto& name : family_names()) CHECK(family_name(parse_family(name)) == name);
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);

  const auto zz = verify_family_Dr(Family::ZbarZbar, 1, 2, 1);
  CHECK(zz.pass);
  CHECK(zz.computed == zz.expected);
  CHECK_FALSE(zz.computed.is_zero());

  const auto z2242 = verify_family_Dr(Family::Z2242, 1, 1, 1);
  CHECK(z2242.pass);
  for (const auto& [stage, ok] : z2242.stages) {
    CAPTURE(stage);
    CHECK(ok);
  }
  CHECK_THROWS_AS(verify_family_Dr(Family::Z2242, 1, 1, family_max_r(Family::Z2242, 1, 1) + 1), std::invalid_argument);

  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int r = 1; r <= family_max_r(Family::OddOdd, a, b + 1); ++r) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(r);
        CHECK(verify_family_Dr(Family::OddOdd, a, b + 1, r).pass);
      }
}

TEST_CASE("binomial identities") {
  const auto [one, two] = lemma_binomial(2, 1, 1);
  CHECK(one.lhs == 1);
  CHECK(one.pass());
  CHECK(two.lhs == Rational(1, 8));
  CHECK(two.pass());
  CHECK_THROWS_AS(lemma_binomial(1, 1, 1), std::invalid_argument);
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) CHECK(verify_lemma_binomial(k, l));
  CHECK(verify_mod_products_2242(1, 1));
  CHECK(verify_mod_products_2242(2, 3));
  for (const auto& m : mod_products_checks(2, 3)) CHECK(m.coaction_residual == 0);
}
