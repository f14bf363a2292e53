#include "mzv/numeval.hpp"

#include "../support/brute.hpp"

#include <cstdio>
#include <doctest.h>
#include <fstream>

using namespace mzv;
using testsupport::overlap;
using testsupport::within;

namespace {

constexpr int kDigits = 30;
const mpfr_prec_t kPrec = bits_for_digits(kDigits) + 16;

Real tol(int e) { return errb::pow10(-e); }
BigReal lit(const char* s) { return BigReal(Real::from_string(s, kPrec), errb::pow10(-28)); }

}  // namespace

TEST_CASE("single values against independent oracles") {
  // direct summation with Euler-Maclaurin tail, not the iterated-integral engine
  for (int k = 2; k <= 8; ++k) CHECK(within(eval_index(idx({k}), kDigits), oracle_eval(idx({k}), kDigits), tol(25)));
  CHECK(within(eval_index(idx({2}), 20), lit("1.64493406684822643647241516665"), tol(18)));
  CHECK(within(eval_index(idx({3}), 20), lit("1.20205690315959428539973816151"), tol(18)));
  // zeta(2bar) = -zeta(2)/2 and zeta(1bar) = -log 2
  const BigReal z2 = eval_index(idx({2}), kDigits);
  CHECK(within(eval_index(idx({-2}), kDigits), z2.scaled(Rational(-1, 2)), tol(25)));
  CHECK(within(eval_index(idx({-1}), kDigits), log2_const(kDigits).scaled(-1), tol(25)));
  CHECK(within(eval_index(idx({-1}), 20), lit("-0.693147180559945309417232121458"), tol(18)));
  for (int k = 2; k <= 6; ++k) {
    // sum_{n>=1} (-1)^n n^-k = 2^-k sum_j [(j+1)^-k - (j+1/2)^-k]
    const BigReal h = hurwitz_diff(k, Rational(1), Rational(1, 2), kDigits).scaled(pow2(-k));
    CHECK(within(eval_index(idx({-k}), kDigits), h, tol(25)));
  }
}

TEST_CASE("constants") {
  CHECK(within(zeta_single(4, kDigits), pi_power(4, kDigits).scaled(Rational(1, 90)), tol(25)));
  CHECK(within(zeta_single_alt(2, kDigits), pi_power(2, kDigits).scaled(Rational(-1, 12)), tol(25)));
  CHECK(within(pi_power(2, kDigits).scaled(Rational(1, 6)), eval_index(idx({2}), kDigits), tol(25)));
  for (int n = 2; n <= 10; ++n) CHECK(within(zeta_single(n, kDigits), eval_index(idx({n}), kDigits), tol(25)));
}

TEST_CASE("depth two and three against direct summation") {
  for (const auto& i : {idx({2, 2}), idx({1, 3}), idx({-2, -2}), idx({3, -2}), idx({1, -2}), idx({2, 1, 3}), idx({-1, 2, -2})}) {
    const BigReal a = eval_index(i, 20);
    const BigReal b = oracle_eval(i, 8);
    CHECK(overlap(a, b, tol(12)));
  }
}

TEST_CASE("linear combinations") {
  Evaluator ev(kDigits);
  const BigReal z2 = ev.index(idx({2})), z3 = ev.index(idx({3}));
  LinComb sh;
  sh.add(Monomial{idx({2, 2})}, 2);
  sh.add(Monomial{idx({1, 3})}, 4);
  CHECK(within(ev.lincomb(sh), z2 * z2, tol(25)));
  CHECK(within(ev.lincomb(sh), lit("2.70580808427784547879000924135"), tol(25)));
  LinComb st;
  st.add(Monomial{idx({2, 3})}, 1);
  st.add(Monomial{idx({3, 2})}, 1);
  st.add(Monomial{idx({5})}, 1);
  CHECK(within(ev.lincomb(st), z2 * z3, tol(25)));
  const BigReal c = ev.lincomb(LinComb::constant(Rational(3, 2)));
  CHECK(within(c, lit("1.5"), tol(25)));
}

TEST_CASE("multiple t values") {
  const BigReal t2 = eval_t({2}, 12);
  CHECK(within(t2, pi_power(2, 20).scaled(Rational(1, 8)), tol(10)));
  CHECK(within(eval_t({3}, 12), eval_index(idx({3}), 20).scaled(Rational(7, 8)), tol(10)));
  // t(2)^2 = 2 t(2,2) + t(4)
  const BigReal t4 = eval_t({4}, 12);
  const BigReal t22 = eval_t({2, 2}, 12);
  CHECK(within(t22, (t2 * t2 - t4).scaled(Rational(1, 2)), tol(9)));
  CHECK(within(t22, pi_power(4, 20).scaled(Rational(1, 384)), tol(10)));
  CHECK_THROWS_AS(eval_t({1, 2}, 12), PrecisionError);
  CHECK_THROWS_AS(eval_t({2, 1}, 12), std::invalid_argument);
}

TEST_CASE("serial and parallel batches agree bit for bit") {
  std::vector<SignedIndex> xs = {idx({2}), idx({3}), idx({-2, -2}), idx({2, 1, -3}), idx({1, 1, 4, 6}), idx({5, -3})};
  const auto s = eval_batch_serial(xs, 25);
  const auto p = eval_batch_parallel(xs, 25, 4);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].value == p[i].value);
    CHECK(s[i].err == p[i].err);
  }
}

TEST_CASE("constant cache") {
  const std::string path = "test_numeval_cache.json";
  std::remove(path.c_str());
  {
    ConstCache c;
    CHECK_FALSE(c.load(path));
    Evaluator ev(20, &c);
    ev.index(idx({2, 2}));
    ev.index(idx({-2, -2}));
    CHECK(c.size() == 2);
    c.save(path);
  }
  {
    ConstCache c;
    CHECK(c.load(path));
    CHECK(c.size() == 2);
    BigReal v;
    CHECK(c.lookup("zeta(2,2)", 20, v));
    CHECK(within(v, eval_index(idx({2, 2}), 20), tol(18)));
    CHECK_FALSE(c.lookup("zeta(2,2)", 40, v));  // stored precision too low
  }
  {
    // a corrupt entry is dropped and recomputed
    std::ofstream(path) << R"j({"zeta(2,2)": {"value": "garbage", "err": "1e-20", "digits": 20}})j";
    ConstCache c;
    CHECK(c.load(path));
    CHECK(c.size() == 0);
    CHECK(c.dropped() == 1);
    Evaluator ev(20, &c);
    ev.index(idx({2, 2}));
    CHECK(c.size() == 1);
  }
  std::remove(path.c_str());
}
