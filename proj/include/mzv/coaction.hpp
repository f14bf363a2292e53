#pragma once

#include "mzv/mzvword.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mzv {

/// I(begin; inner; end) with explicit endpoints.
struct BoundedWord {
  Letter begin = 0;
  Word inner;
  Letter end = 1;
  auto operator<=>(const BoundedWord&) const = default;
};

struct TensorTerm {
  BoundedWord left;
  Word right;  // read as I(0; right; 1)
  Rational coeff;
};

/// Sum of left (x) right terms of one infinitesimal coaction D_r.
struct TensorSum {
  int r = 0;
  int n = 0;  // length of the source word
  std::vector<TensorTerm> terms;

  /// Terms merged by (left, right); zero coefficients removed.
  std::map<std::pair<BoundedWord, Word>, Rational> collect() const;
};

/// D_r on I(0; w; 1): all length-r subwords a_{k+1..k+r} of a = (0, w, 1),
/// left factor I(a_k; ...; a_{k+r+1}), right factor w with the subword removed.
/// Left factors with equal endpoints are dropped. Throws unless 1 <= r <= |w|.
TensorSum d_r_word(const Word& w, int r);

/// Value of a left factor in the Lie coalgebra, as c * zeta^l(index); c = 0
/// means the factor vanishes. `index` has depth 1 when c != 0.
struct LeftValue {
  Rational c;
  SignedIndex index;
};

/// Table-driven reduction of a left factor. Endpoints are brought to (0; 1)
/// by reversal, x -> -x and x -> 1-x ({0,1} letters only); (+-1; -+1) is split
/// through 0. Recognised shapes: all zeros (value 0), a single nonzero letter
/// (depth-1 regularisation), and 0,(1,0)^r (2 zeta^l(2r+1)). Anything else
/// yields nullopt.
std::optional<LeftValue> normalize_left_factor(const BoundedWord& left);

/// D_{2r+1} of zeta(index) written as zeta^l(2r+1) (x) R; returns R. Barred left
/// values are rewritten through zeta^l(Nbar) = -(1 - 2^{1-N}) zeta^l(N).
/// Throws std::domain_error naming the left factor on an unsupported shape.
LinComb d_odd_index(const SignedIndex& i, int r);
/// Same, extended to products by the derivation rule D(XY) = (1 (x) Y)DX + (1 (x) X)DY.
LinComb d_odd_lincomb(const LinComb& x, int r);

/// Expands every product into a linear combination of indices by the stuffle.
LinComb stuffle_linearize(const LinComb& x);
/// Coefficient of zeta^l(N) in the image of a right factor modulo products:
/// single values and zeta({2}^a, 3, {2}^b) are supported, products map to 0.
Rational pi_projection(const LinComb& right);

// ---- family checks --------------------------------------------------------

enum class Family { ZbarZbar, OddOdd, GeneralEven, Z1TwoBbar, Z1Odd, Z2242, Zstar2242 };

const std::vector<std::string>& family_names();
Family parse_family(const std::string& s);
std::string family_name(Family f);

/// Result of one exact comparison; `stages` lists the named sub-checks.
struct Certificate {
  bool pass = false;
  std::vector<std::pair<std::string, bool>> stages;
  LinComb computed;  // right factor obtained from the words
  LinComb expected;  // right factor from the closed form
  std::string note;
};

/// Largest r with 3 <= 2r+1 <= weight - 1 for the family word.
int family_max_r(Family f, int p1, int p2);
/// p1, p2 are (a, b), or (p, q) for GeneralEven. Throws std::invalid_argument
/// on parameters outside the family's range or r outside [1, family_max_r].
Certificate verify_family_Dr(Family f, int p1, int p2, int r);

/// Both sides of one binomial identity.
struct BinomialCheck {
  Rational lhs, rhs;
  bool pass() const { return lhs == rhs; }
};

/// The two binomial identities (i) and (ii) in k, l, r.
/// Throws std::invalid_argument unless 3 <= 2r+1 <= 2k+2l-3.
std::pair<BinomialCheck, BinomialCheck> lemma_binomial(int k, int l, int r);
/// All valid r; an empty range passes vacuously.
bool verify_lemma_binomial(int k, int l);

/// For each 3 <= 2r+1 <= 2a+2b+1: the displayed binomial identity, and the
/// antisymmetrised projected coaction of the difference of both sides of the
/// modulo-products evaluation computed from words.
struct ModProductsCheck {
  int r = 0;
  BinomialCheck binomial;
  Rational coaction_residual;  // must vanish
  bool pass() const { return binomial.pass() && coaction_residual == 0; }
};
std::vector<ModProductsCheck> mod_products_checks(int a, int b);
bool verify_mod_products_2242(int a, int b);

}  // namespace mzv
