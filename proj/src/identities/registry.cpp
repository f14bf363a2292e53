#include "mzv/identities.hpp"

#include <stdexcept>

namespace mzv {

const std::vector<IdentitySpec>& identity_specs() {
  static const std::vector<IdentitySpec> specs = {
      {"stuffle-antipode-2242", {{"a", 0, 2}, {"b", 0, 2}}, "zeta({2}^a,4,{2}^b) from star values via the stuffle antipode"},
      {"two-one-2242", {{"a", 0, 2}, {"b", 0, 2}}, "zeta*({2}^a,4,{2}^b) as alternating values of depth <= 3"},
      {"parity3", {{"a", 0, 2}, {"b", 0, 2}}, "depth-3 parity reduction of zeta(2a+1,1,2b+2bar)"},
      {"zeta1bar-red", {{"b", 0, 3}}, "zeta(1,2b+2bar) in single values"},
      {"full1", {{"a", 0, 2}, {"b", 0, 2}}, "zeta*({2}^a,4,{2}^b) in depth <= 2, stuffle form"},
      {"full2", {{"a", 0, 2}, {"b", 0, 2}}, "zeta*({2}^a,4,{2}^b) in depth <= 2, shuffle form"},
      {"dihedral-even", {{"k", 1, 3}, {"l", 1, 3}}, "zeta_{2k-1}(1,2l bar) - zeta(2l bar,2k bar)"},
      {"dihedral-odd", {{"k", 0, 3}, {"l", 0, 3}}, "zeta_{2k}(1,2l+1) - zeta(2l+1,2k+1)"},
      {"gen-doubling", {{"s", 2, 4}, {"t", 2, 4}, {"form", 1, 2}}, "generalised doubling in depth 2, both forms"},
      {"galois-evbar", {{"k", 1, 3}, {"l", 1, 3}}, "zeta(2l bar,2k bar) in classical double zetas"},
      {"zetastar-2242", {{"a", 0, 2}, {"b", 0, 2}}, "closed form of zeta*({2}^a,4,{2}^b)"},
      {"zeta-2242", {{"a", 0, 2}, {"b", 0, 2}}, "closed form of zeta({2}^a,4,{2}^b)"},
      {"z2242-modprod", {{"a", 0, 2}, {"b", 0, 2}}, "zeta({2}^a,4,{2}^b) modulo products (exact)"},
      {"double-telescope", {{"a", 0, 2}, {"n", 0, 6}}, "telescoping sum of the 2242 family (exact)"},
      {"t-expand", {{"a", 2, 4}, {"b", 2, 4}}, "t(a,b) through zeta(abar,bbar) and zeta(a,b)"},
      {"t-even-even", {{"k", 1, 3}, {"l", 1, 3}}, "t(2l,2k) in classical double zetas"},
      {"t-odd-even", {{"a", 1, 3}, {"b", 1, 3}}, "t(2a+1,2b) in single values"},
      {"t-even-odd", {{"a", 1, 3}, {"b", 1, 3}}, "t(2a,2b+1) in single values"},
      {"t39", {}, "t(3,9) including zeta(1,1,4,6)"},
  };
  return specs;
}

IdentityInstance build_identity(const std::string& id, const std::vector<int>& p) {
  const IdentitySpec* spec = nullptr;
  for (const auto& s : identity_specs())
    if (s.id == id) spec = &s;
  if (!spec) throw std::invalid_argument("unknown identity: " + id);
  if (p.size() != spec->params.size()) throw std::invalid_argument(id + ": wrong number of parameters");
  if (id == "stuffle-antipode-2242") return stuffle_antipode_2242(p[0], p[1]);
  if (id == "two-one-2242") return two_one_2242(p[0], p[1]);
  if (id == "parity3") return parity3(p[0], p[1]);
  if (id == "zeta1bar-red") return zeta1_bar_reduction(p[0]);
  if (id == "full1") return full_reduction_1(p[0], p[1]);
  if (id == "full2") return full_reduction_2(p[0], p[1]);
  if (id == "dihedral-even") return dihedral_even(p[0], p[1]);
  if (id == "dihedral-odd") return dihedral_odd(p[0], p[1]);
  if (id == "gen-doubling") return generalized_doubling(p[0], p[1], p[2]);
  if (id == "galois-evbar") return galois_descent_evbar(p[0], p[1]);
  if (id == "zetastar-2242") return zetastar_2242_closed(p[0], p[1]);
  if (id == "zeta-2242") return zeta_2242_closed(p[0], p[1]);
  if (id == "z2242-modprod") return z2242_modprod(p[0], p[1]);
  if (id == "double-telescope") return double_telescope(p[0], p[1]);
  if (id == "t-expand") return t_expand({p[0], p[1]});
  if (id == "t-even-even") return t_even_even(p[0], p[1]);
  if (id == "t-odd-even") return t_odd_even(p[0], p[1]);
  if (id == "t-even-odd") return t_even_odd(p[0], p[1]);
  return t39_testvector();
}

}  // namespace mzv
