#include "mzv/exactalg.hpp"

#include <stdexcept>
#include <utility>

namespace mzv {

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row; rows become primitive integer vectors.
std::vector<IntRow> integer_rows(const RatMatrix& m) {
  std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

void make_primitive(IntRow& r) {
  Integer g = 0;
  for (const auto& x : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free forward elimination: integer row echelon form, rows kept
// primitive (content removed) so entries stay small. Returns pivot columns.
std::vector<std::size_t> echelon(std::vector<IntRow>& a, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols && k < a.size(); ++c) {
    std::size_t p = k;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[k], a[p]);
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      const Integer f = a[i][c], g = a[k][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = g * a[i][j] - f * a[k][j];
      make_primitive(a[i]);
    }
    piv.push_back(c);
    ++k;
  }
  a.resize(k);
  return piv;
}

}  // namespace

void RatMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::size_t RatMatrix::rank() const {
  auto a = integer_rows(*this);
  return echelon(a, cols_).size();
}

RatMatrix RatMatrix::rref(std::vector<std::size_t>* pivots) const {
  auto a = integer_rows(*this);
  auto piv = echelon(a, cols_);
  RatMatrix r(piv.size(), cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = Rational(a[i][j]) / Rational(a[i][piv[i]]);
  // back substitution, bottom-up
  for (std::size_t i = piv.size(); i-- > 0;)
    for (std::size_t h = 0; h < i; ++h) {
      const Rational f = r(h, piv[i]);
      if (f == 0) continue;
      for (std::size_t j = piv[i]; j < cols_; ++j) r(h, j) -= f * r(i, j);
    }
  if (pivots) *pivots = piv;
  return r;
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
  std::vector<std::size_t> piv;
  RatMatrix r = rref(&piv);
  std::vector<char> is_piv(cols_, 0);
  for (auto p : piv) is_piv[p] = 1;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> x(cols_);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -r(i, f);
    Rational lead = 0;
    for (const auto& v : x)
      if (v != 0) {
        lead = v;
        break;
      }
    for (auto& v : x) v /= lead;
    out.push_back(std::move(x));
  }
  return out;
}

bool RatMatrix::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
  if (b.size() != rows_) throw std::invalid_argument("solve: rhs length");
  RatMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<std::size_t> piv;
  RatMatrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return false;
  x.assign(cols_, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, cols_);
  return true;
}

}  // namespace mzv
