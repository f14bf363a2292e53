#include "mzv/identities.hpp"
#include "mzv/numeval.hpp"

#include "../support/brute.hpp"

#include <doctest.h>

using namespace mzv;
using testsupport::within;

namespace {

LinComb L(std::initializer_list<int> ks, const Rational& c = 1) { return LinComb::single(idx(ks), c); }
LinComb z2pow(int k, const Rational& c) {
  LinComb x = LinComb::constant(c);
  for (int i = 0; i < k; ++i) x = x * L({2});
  return x;
}

Real tol(int e) { return errb::pow10(-e); }

bool numeric_holds(const IdentityInstance& inst, Evaluator& ev, int e) {
  const BigReal l = inst.t_lhs.empty() ? ev.lincomb(inst.lhs) : eval_t(inst.t_lhs, 12);
  return within(l, ev.lincomb(inst.rhs), tol(e));
}

}  // namespace

TEST_CASE("two-blocks closed forms") {
  // zeta(2,2) = pi^4/120 = 3/10 zeta(2)^2, zeta*(2,2) = 7 pi^4/360 = 7/10 zeta(2)^2
  CHECK(exact_equal(zeta_two_blocks(2), z2pow(2, Rational(3, 10))));
  CHECK(exact_equal(zetastar_two_blocks(2), z2pow(2, Rational(7, 10))));
  Evaluator ev(30);
  for (int n = 1; n <= 5; ++n) {
    const SignedIndex i = idx_from(std::vector<int>(n, 2));
    CHECK(within(ev.lincomb(zeta_two_blocks(n)), ev.index(i), tol(25)));
  }
  // zeta*(2,2,2) sums zeta over the merged compositions of (2,2,2)
  const LinComb star3 = L({2, 2, 2}) + L({4, 2}) + L({2, 4}) + L({6});
  CHECK(within(ev.lincomb(zetastar_two_blocks(3)), ev.lincomb(star3), tol(25)));
}

TEST_CASE("alternating depth two against stuffle oracles") {
  // zeta(2bar)^2 = 2 zeta(2bar,2bar) + zeta(4)
  const LinComb from_stuffle = (L({-2}) * L({-2}) - L({4})) * Rational(1, 2);
  CHECK(exact_equal(from_stuffle, L({4}, Rational(-3, 16))));
  const auto g = galois_descent_evbar(1, 1);
  CHECK(exact_equal(g.rhs, L({4}, Rational(-3, 16))));
  CHECK(exact_equal(g.rhs, from_stuffle));
  CHECK(exact_equal(dihedral_even(1, 1).rhs, L({4}, Rational(-1, 8))));
  // t(2)^2 = 2 t(2,2) + t(4), t(2) = 3/4 zeta(2), t(4) = 15/16 zeta(4)
  const LinComb t22 = (t_single(2) * t_single(2) - t_single(4)) * Rational(1, 2);
  CHECK(exact_equal(t22, z2pow(2, Rational(3, 32))));
  CHECK(exact_equal(t_even_even(1, 1).rhs, z2pow(2, Rational(3, 32))));
}

TEST_CASE("t39 test vector") {
  const auto t = t39_testvector();
  CHECK(t.t_lhs == std::vector<int>{3, 9});
  CHECK(t.rhs.coeff(Monomial{idx({1, 1, 4, 6})}) == Rational(9, 128));
  Evaluator ev(30);
  CHECK(numeric_holds(t, ev, 10));
}

TEST_CASE("the two full reductions agree exactly") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(exact_equal(full_reduction_1(a, b).rhs, full_reduction_2(a, b).rhs));
    }
}

TEST_CASE("stuffle-regularised right sides do not depend on T") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const LinComb r0 = full_reduction_1_rhs(a, b, 0);
      CHECK(exact_equal(r0, full_reduction_1_rhs(a, b, 1)));
      CHECK(exact_equal(r0, full_reduction_1_rhs(a, b, 2)));
    }
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      const Part al{2 * a + 1, 1}, be{1, 1}, ga{2 * b + 2, -1};
      CHECK(exact_equal(parity_depth3(al, be, ga, 0), parity_depth3(al, be, ga, Rational(5, 3))));
    }
}

TEST_CASE("closed forms against the evaluator") {
  Evaluator ev(40);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      CHECK(numeric_holds(zeta_2242_closed(a, b), ev, 30));
      CHECK(numeric_holds(zetastar_2242_closed(a, b), ev, 30));
      CHECK(numeric_holds(stuffle_antipode_2242(a, b), ev, 30));
      CHECK(numeric_holds(two_one_2242(a, b), ev, 30));
      CHECK(numeric_holds(full_reduction_1(a, b), ev, 30));
      CHECK(exact_equal(zeta_2242_via_star(a, b), zeta_2242_rhs(a, b)));
    }
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) {
      CHECK(numeric_holds(dihedral_even(k, l), ev, 30));
      CHECK(numeric_holds(galois_descent_evbar(k, l), ev, 30));
      CHECK(exact_equal(galois_descent_derived(k, l), galois_descent_evbar(k, l).rhs));
    }
  CHECK(numeric_holds(dihedral_odd(1, 2), ev, 30));
  CHECK(numeric_holds(generalized_doubling(2, 4, 1), ev, 30));
  CHECK(numeric_holds(generalized_doubling(3, 3, 2), ev, 30));
  CHECK(numeric_holds(zeta1_bar_reduction(2), ev, 30));
}

TEST_CASE("modulo products and the telescope") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      const auto m = z2242_modprod(a, b);
      CHECK(m.exact);
      CHECK(m.lhs == m.rhs);
    }
  for (int n = 0; n <= 8; ++n)
    for (int a = 0; 2 * a <= n; ++a) {
      CAPTURE(n);
      CAPTURE(a);
      CHECK(double_zeta_telescope(a, n).pass);
    }
  // zeta(x,y) + zeta(y,x) = zeta(x) zeta(y) - zeta(x+y) is a product modulo even weight
  CHECK(antisymmetrize_depth2(L({3, 5}) + L({5, 3})).is_zero());
  CHECK(antisymmetrize_depth2(L({4, 4})).is_zero());
}

TEST_CASE("registry rejects parameters outside the formulas") {
  CHECK_THROWS_AS(build_identity("t-expand", {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_identity("no-such-id", {}), std::invalid_argument);
  CHECK_THROWS_AS(build_identity("dihedral-even", {0, 1}), std::invalid_argument);
  for (const auto& s : identity_specs()) {
    std::vector<int> p;
    for (const auto& r : s.params) p.push_back(r.hi);
    const auto inst = build_identity(s.id, p);
    CHECK(inst.id == s.id);
  }
}
