#pragma once

#include "mzv/canon.hpp"
#include "mzv/mzvword.hpp"

#include <string>
#include <vector>

namespace mzv {

/// One instance of a closed-form evaluation or relation.
///
/// Numeric instances are checked by evaluating lhs and rhs; when `t_lhs` is
/// nonempty the left side is the multiple t value t(t_lhs) evaluated by its own
/// series, and `lhs` holds its alternating expansion. Exact instances compare
/// lhs and rhs as LinCombs (both already in normal form).
struct IdentityInstance {
  std::string id;
  std::vector<int> params;
  LinComb lhs;
  LinComb rhs;
  std::vector<int> t_lhs;
  bool exact = false;
};

// ---- building blocks ---------------------------------------------------

/// zeta(n) with the conventions zeta(0) = -1/2 and zeta(1) = 0 (regularised).
LinComb zs(int n);
/// zeta(nbar) with zeta(0bar) = -1/2.
LinComb zb(int n);
/// zeta of a signed index given as signed integers (negative = barred).
LinComb zl(std::initializer_list<int> ks);
/// Depth-2 zeta(x, y) with stuffle regularisation at T when y = (1,+1):
/// zeta(x,1) = T zeta(x) - zeta(1,x) - zeta(x (+) 1), zeta(1,1) = (T^2 - zeta(2))/2.
LinComb dz_reg(Part x, Part y, const Rational& T = 0);
/// zeta_l(parts) by the regularisation formula, with divergent depth-2 tails
/// taken through dz_reg at T = 0.
LinComb shreg(const std::vector<Part>& parts, int l);

LinComb zeta_two_blocks(int n);
LinComb zetastar_two_blocks(int n);
/// zeta*({2}^a, 3, {2}^b) as a polynomial in single zetas.
LinComb zetastar_223(int a, int b);

/// The index ({2}^a, 4, {2}^b).
SignedIndex index_2242(int a, int b);

// ---- depth reductions and closed forms ------------------------------------

IdentityInstance stuffle_antipode_2242(int a, int b);
IdentityInstance two_one_2242(int a, int b);
/// -8 zeta^{1/2}(2a+1, 1, 2b+2bar) expanded; equals the right side of two_one_2242.
LinComb two_one_block_form(int a, int b);

/// Right side of the depth-3 parity formula for zeta(alpha, beta, gamma),
/// stuffle-regularised at T (the result does not depend on T).
LinComb parity_depth3(Part alpha, Part beta, Part gamma, const Rational& T = 0);
/// Instance zeta(2a+1, 1, 2b+2bar) = parity_depth3(...).
IdentityInstance parity3(int a, int b);

IdentityInstance zeta1_bar_reduction(int b);
/// Right side of the first full reduction at stuffle parameter T.
LinComb full_reduction_1_rhs(int a, int b, const Rational& T = 0);
IdentityInstance full_reduction_1(int a, int b);
IdentityInstance full_reduction_2(int a, int b);

IdentityInstance dihedral_even(int k, int l);
IdentityInstance dihedral_odd(int k, int l);
/// form 1: stuffle-regularised display; form 2: rewritten with zeta_{t-1}(1, sbar).
IdentityInstance generalized_doubling(int s, int t, int form);
IdentityInstance galois_descent_evbar(int k, int l);
/// zeta(2l bar, 2k bar) obtained by solving the even dihedral relation together
/// with the doubling identity at (s, t) = (2l, 2k).
LinComb galois_descent_derived(int k, int l);

LinComb zetastar_2242_rhs(int a, int b);
LinComb zeta_2242_rhs(int a, int b);
IdentityInstance zetastar_2242_closed(int a, int b);
IdentityInstance zeta_2242_closed(int a, int b);
/// Right side of zeta({2}^a,4,{2}^b) via the stuffle antipode and the closed form of the star values.
LinComb zeta_2242_via_star(int a, int b);

LinComb z2242_mod_products(int a, int b);
IdentityInstance z2242_modprod(int a, int b);

/// zeta(x, y) -> -zeta(y, x), zeta(x, x) -> 0, products and singles dropped.
LinComb antisymmetrize_depth2(const LinComb& x);
struct TelescopeCertificate {
  LinComb sum;        // sum_{i=a}^{n-a} z2242_mod_products(i, n-i)
  LinComb reduced;    // antisymmetrized sum
  LinComb expected;   // antisymmetrized 4(-1)^n zeta(2a+1, 2n-2a+3)
  bool pass = false;
};
TelescopeCertificate double_zeta_telescope(int a, int n);
IdentityInstance double_telescope(int a, int n);

// ---- multiple t values ---------------------------------------------------

/// t(k) = 2^-d sum_eps eps_1...eps_d zeta(eps (.) k).
LinComb t_from_alternating(const std::vector<int>& parts);
/// t(a) = (1 - 2^-a) zeta(a).
LinComb t_single(int a);
IdentityInstance t_expand(const std::vector<int>& parts);
IdentityInstance t_even_even(int k, int l);
IdentityInstance t_odd_even(int a, int b);
IdentityInstance t_even_odd(int a, int b);
IdentityInstance t39_testvector();

// ---- registry --------------------------------------------------------------

struct ParamRange {
  std::string name;
  int lo = 0, hi = 0;  // default range when none is given
};
struct IdentitySpec {
  std::string id;
  std::vector<ParamRange> params;
  std::string summary;
};
const std::vector<IdentitySpec>& identity_specs();
/// Builds the instance; throws std::invalid_argument outside the formula's range.
IdentityInstance build_identity(const std::string& id, const std::vector<int>& params);

}  // namespace mzv
