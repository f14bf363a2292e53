#include "mzv/exactalg.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace mzv {

namespace {

// Grows a memo table under an exclusive lock; reads take a shared lock.
template <class T, class Grow>
T memo_get(std::vector<T>& table, std::shared_mutex& mu, int n, Grow grow) {
  {
    std::shared_lock lk(mu);
    if (n < static_cast<int>(table.size())) return table[n];
  }
  std::unique_lock lk(mu);
  while (static_cast<int>(table.size()) <= n) grow(table);
  return table[n];
}

std::vector<Rational> g_bern;
std::shared_mutex g_bern_mu;
std::vector<Integer> g_euler;
std::shared_mutex g_euler_mu;

}  // namespace

Integer binom_z(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  Integer r = binom_z(-n + k - 1, k);
  return (k % 2) ? Integer(-r) : r;
}

Rational binom(long n, long k) { return Rational(binom_z(n, k)); }

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational pow2(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

Rational rpow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("0^negative");
    return 1 / rpow(x, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  return memo_get(g_bern, g_bern_mu, n, [](std::vector<Rational>& t) {
    // sum_{k=0}^{m} binom(m+1,k) B_k = 0
    const long m = static_cast<long>(t.size());
    if (m == 0) {
      t.emplace_back(1);
      return;
    }
    Rational s = 0;
    for (long k = 0; k < m; ++k) s += binom(m + 1, k) * t[k];
    t.push_back(-s / (m + 1));
  });
}

Integer euler_number(int n) {
  if (n < 0) throw std::invalid_argument("euler_number: negative index");
  return memo_get(g_euler, g_euler_mu, n, [](std::vector<Integer>& t) {
    // cosh * sech = 1: sum_k binom(m,2k) E_{m-2k} = 0 for m >= 1
    const long m = static_cast<long>(t.size());
    if (m == 0) {
      t.emplace_back(1);
      return;
    }
    if (m % 2) {
      t.emplace_back(0);
      return;
    }
    Integer s = 0;
    for (long k = 1; 2 * k <= m; ++k) s += binom_z(m, 2 * k) * t[m - 2 * k];
    t.push_back(-s);
  });
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace mzv
