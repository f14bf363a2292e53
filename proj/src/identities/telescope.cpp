#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

LinComb antisymmetrize_depth2(const LinComb& x) {
  LinComb r;
  for (const auto& [m, c] : x.terms()) {
    if (m.size() != 1 || m[0].depth() != 2) continue;
    const auto& p = m[0].parts;
    if (!m[0].classical()) {
      r.add(m, c);
      continue;
    }
    // zeta(x,y) + zeta(y,x) is a product minus a single
    if (p[0].k == p[1].k) continue;
    if (p[0].k < p[1].k) r.add(m, c);
    else r.add({SignedIndex({p[1], p[0]})}, -c);
  }
  return r;
}

TelescopeCertificate double_zeta_telescope(int a, int n) {
  if (a < 0 || 2 * a > n) throw std::invalid_argument("double-telescope: 0 <= 2a <= n");
  TelescopeCertificate cert;
  for (int i = a; i <= n - a; ++i) cert.sum += z2242_mod_products(i, n - i);
  cert.reduced = antisymmetrize_depth2(cert.sum);
  cert.expected = antisymmetrize_depth2(zl({2 * a + 1, 2 * n - 2 * a + 3}) * Rational(n % 2 ? -4 : 4));
  cert.pass = cert.reduced == cert.expected;
  return cert;
}

IdentityInstance double_telescope(int a, int n) {
  const auto cert = double_zeta_telescope(a, n);
  IdentityInstance r;
  r.id = "double-telescope";
  r.params = {a, n};
  r.exact = true;
  r.lhs = cert.reduced;
  r.rhs = cert.expected;
  return r;
}

}  // namespace mzv
