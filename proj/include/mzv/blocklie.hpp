#pragma once

#include "mzv/exactalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace mzv {

/// Which form of the third relation cuts out V_n.
enum class Rel3Mode {
  Span,          // f in span{(x1 +- x2)^i (x2 +- x3)^j : i + j = 2n}
  Differential,  // prod_{s1,s2 = +-1} (d1 + s1 d2 + s1 s2 d3) f = 0
};

/// V_n inside Q[x1, x2, x3], homogeneous of degree 2n. The basis is the reduced
/// row echelon form of the coefficient vectors in graded-lex order, so every
/// vector has first nonzero coefficient 1 and the basis is canonical.
struct VSpace {
  int n = 0;
  std::vector<MultiPoly> basis;
};

VSpace build_Vn(int n, Rel3Mode mode = Rel3Mode::Span);

/// Individual relation checks on a homogeneous polynomial of degree 2n.
struct RelationCheck {
  bool rel0 = false;  // homogeneous of degree 2n (or zero)
  bool rel1 = false;  // cyclic invariance and reversal antisymmetry
  bool rel2 = false;
  bool rel3 = false;  // differential form
  bool all() const { return rel0 && rel1 && rel2 && rel3; }
};
RelationCheck check_relations(const MultiPoly& f, int n);

/// The four families (x1 +- x2)^i (x2 +- x3)^j, i + j = 2n, in that order
/// (signs --, +-, -+, ++) for each i = 0..2n.
std::vector<MultiPoly> span_generators(int n);
/// Kernel of the fourth-order operator on degree-2n polynomials (canonical basis).
std::vector<MultiPoly> differential_kernel(int n);

/// Keeps exactly the monomials whose exponents are all even.
MultiPoly project_Pe(const MultiPoly& f);

struct DimsResult {
  int n = 0;
  int dim_V = 0;
  int dim_im = 0;
  int dim_ker = 0;
  bool pass = false;  // dim_im = floor(n/3), dim_ker = floor((n-1)/2)
};
DimsResult dims_check(int n);

/// Basis of P_e V_n (canonical echelon form).
std::vector<MultiPoly> image_Pe_basis(int n);

/// The spanning polynomial of the eta decomposition:
/// (x1-x2)^i(x2-x3)^j + (-1)^i (x1+x2)^i(x2-x3)^j + (x1-x2)^i(x2+x3)^j + (-1)^i (x1+x2)^i(x2+x3)^j.
MultiPoly eta_generator(int i, int j);

struct EtaDecomp {
  int n = 0;
  std::map<std::pair<int, int>, Rational> eta;  // (i, j) with i + j = 2n; a solution of the augmented system
  bool solvable = false;            // f in span of the eta generators
  bool augmented_solvable = false;  // with antisymmetry and the Bernoulli recursion added
  bool antisymmetric = false;       // eta_{i,j} = -eta_{j,i} on the returned solution
  bool recursion = false;           // Bernoulli recursion on the returned solution
  bool alpha_is_4eta = false;       // coefficient of x1^{2i} x3^{2j} equals 4 eta_{2i,2j}
  bool eta_is_4alpha = false;       // the reverse reading, reported only
};

/// Throws std::domain_error when f is not in the span of the eta generators;
/// an inconsistent augmented system is reported through its flag.
EtaDecomp eta_decompose(const MultiPoly& f, int n);

/// Even period polynomials W_{2n}^+ in Q[x1, x2]: even in each variable,
/// P(x1,0) = P(0,x2) = 0, P(x1,x2) + P(x2,x1) = 0 and
/// P(x1,x2) = P(x1+x2,x2) + P(x1,x1+x2).
struct PeriodSpace {
  int n = 0;
  std::vector<MultiPoly> basis;
};
PeriodSpace build_W_plus(int two_n);
/// The defining conditions, checked directly.
bool is_even_period_polynomial(const MultiPoly& p, int two_n);

/// dim S_{weight} by the case formula in n = weight/2 - 1 with floor semantics.
/// Throws std::invalid_argument for odd weight or weight < 4, and
/// std::logic_error if floor((n-1)/2) - dim S != floor(n/3).
int cusp_dim(int weight);
/// Classical formula: floor(k/12) - [k = 2 mod 12].
int cusp_dim_classical(int weight);

struct KernelPeriodResult {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // (k, l), k + l = n, 1 <= k < l
  std::vector<MultiPoly> images;           // Q(X+Y,Y) + Q(X,X+Y) - Q(X,Y) per pair
  std::vector<std::vector<Rational>> kernel;
  int rank = 0;
  bool equivalence = false;  // (a): kernel <-> W^+ both ways
  bool dims = false;         // (b): dim ker = dim W^+ = cusp_dim(2n+2)
  bool rank_bound = false;   // (c): rank = floor((n-1)/2) - dim S = floor(n/3) = dim im P_e
  bool pass() const { return equivalence && dims && rank_bound; }
};
KernelPeriodResult kernel_period_map(int n);

/// Functional on degree-(2n+2) monomials, sparse.
using Functional = std::map<Exponent, Rational>;
/// F(x1^i x2^j x3^k) = 1/4 delta_{i = 2n-2a+2, j = 0, k = 2a}.
Functional pairing_functional(int a, int n);
/// The same functional built from the block-decomposition pairing summed over
/// zeta({2}^s, 4, {2}^{n-s}), s = a..n-a.
Functional pairing_functional_from_blocks(int a, int n);
Rational apply_functional(const Functional& F, const MultiPoly& f);

/// One row of the dimension table.
struct DimsRow {
  int n = 0;
  int dim_im = 0, dim_ker = 0, dim_W = 0, cusp = 0;
  bool dims_pass = false, kernel_period_pass = false;
};
DimsRow dims_row(int n);
std::vector<DimsRow> dims_table_serial(int n_max);
/// OpenMP over n; identical to the serial table.
std::vector<DimsRow> dims_table_parallel(int n_max, int jobs);

/// {"n": .., "dim_V": .., "dim_im": .., "dim_ker": .., "basis": [{"i,j,k": "q"}, ..]}
std::string vspace_golden_json(int n);

}  // namespace mzv
