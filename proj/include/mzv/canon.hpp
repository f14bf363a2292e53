#pragma once

#include "mzv/mzvword.hpp"

#include <map>
#include <vector>

namespace mzv {

/// zeta(2k) = c * zeta(2)^k; returns c.
Rational even_zeta_coeff(int k);

/// pi^{2k} written as 6^k zeta(2)^k.
LinComb pi_power_lc(int k);

/// Normal form of zeta(n) / zeta(nbar): barred values become
/// -(1 - 2^{1-n}) zeta(n), even values become powers of zeta(2), zeta(1) -> 0
/// (regularised), zeta(1bar) = -log 2 is kept.
LinComb canon_single(int n, int eps);

/// Depth-2 reduction table of one weight: every convergent depth-2 index
/// (signed) expressed in the free ones plus depth-1 products, from the
/// double shuffle and distribution relations.
struct DepthTwoReduction {
  std::map<SignedIndex, LinComb> red;
  std::vector<SignedIndex> free;
  std::size_t inconsistent = 0;  // relations left with a nonzero constant
};
const DepthTwoReduction& depth_two_reduction(int weight);

/// Canonical form used for exact comparisons: depth 1 via canon_single,
/// depth 2 via the reduction table, deeper indices unchanged.
LinComb canon(const LinComb& x);
bool exact_equal(const LinComb& a, const LinComb& b);

/// Keeps the single-index terms of depth >= 2 and the odd depth-1 terms,
/// i.e. drops products, constants and even singles (which are powers of pi).
LinComb drop_products(const LinComb& x);

}  // namespace mzv
