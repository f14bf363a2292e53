#include "mzv/blocklie.hpp"

#include "mzv/identities.hpp"
#include "mzv/mzvword.hpp"

#include <omp.h>
#include <stdexcept>

namespace mzv {

namespace {

// P(X+Y, Y) + P(X, X+Y) - P(X, Y); the all-plus reading has no nonzero solutions
MultiPoly three_term(const MultiPoly& p) {
  const MultiPoly X = MultiPoly::variable(2, 0), Y = MultiPoly::variable(2, 1);
  return poly_substitute(p, {X + Y, Y}) + poly_substitute(p, {X, X + Y}) - p;
}

MultiPoly Q(int k, int l) {
  return MultiPoly::monomial({2 * k, 2 * l}) - MultiPoly::monomial({2 * l, 2 * k});
}

}  // namespace

PeriodSpace build_W_plus(int two_n) {
  if (two_n < 2 || two_n % 2) throw std::invalid_argument("build_W_plus: degree must be even and >= 2");
  const int n = two_n / 2;
  // unknown c_i multiplies x1^{2i} x2^{2n-2i}
  std::vector<MultiPoly> mons;
  for (int i = 0; i <= n; ++i) mons.push_back(MultiPoly::monomial({2 * i, 2 * n - 2 * i}));
  RatMatrix A(0, n + 1);
  auto unit_row = [&](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Rational> row(n + 1);
    for (auto [i, c] : entries) row[i] += c;
    A.append_row(row);
  };
  unit_row({{0, 1}});
  unit_row({{n, 1}});
  for (int i = 0; i <= n; ++i) unit_row({{i, 1}, {n - i, 1}});
  std::map<Exponent, std::vector<Rational>> rows;
  for (int i = 0; i <= n; ++i) {
    const MultiPoly img = three_term(mons[i]);
    for (const auto& [e, c] : img.terms()) {
      auto& row = rows[e];
      row.resize(n + 1);
      row[i] += c;
    }
  }
  for (const auto& [e, row] : rows) A.append_row(row);

  PeriodSpace w;
  w.n = n;
  for (const auto& v : A.nullspace()) {
    MultiPoly p(2);
    for (int i = 0; i <= n; ++i)
      if (v[i] != 0) p += mons[i] * v[i];
    w.basis.push_back(p);
  }
  return w;
}

bool is_even_period_polynomial(const MultiPoly& p, int two_n) {
  if (p.nvars() != 2) return false;
  if (p.is_zero()) return true;
  if (p.homogeneous_degree() != two_n) return false;
  for (const auto& [e, c] : p.terms())
    if (e[0] % 2 || e[1] % 2) return false;
  const MultiPoly X = MultiPoly::variable(2, 0), Y = MultiPoly::variable(2, 1), zero(2);
  if (!poly_substitute(p, {X, zero}).is_zero() || !poly_substitute(p, {zero, Y}).is_zero()) return false;
  if (!(p + poly_substitute(p, {Y, X})).is_zero()) return false;
  return three_term(p).is_zero();
}

int cusp_dim(int weight) {
  if (weight % 2 || weight < 4) throw std::invalid_argument("cusp_dim: weight must be even and >= 4");
  const int n = weight / 2 - 1;
  int d = 0;
  switch (n % 6) {
    case 0: d = n / 6 - 1; break;
    case 5: d = n / 6 + 1; break;
    default: d = n / 6; break;
  }
  if ((n - 1) / 2 - d != n / 3) throw std::logic_error("cusp_dim: floor((n-1)/2) - dim S != floor(n/3)");
  return d;
}

int cusp_dim_classical(int weight) {
  if (weight % 2 || weight < 4) throw std::invalid_argument("cusp_dim_classical: weight must be even and >= 4");
  return weight / 12 - (weight % 12 == 2 ? 1 : 0);
}

KernelPeriodResult kernel_period_map(int n) {
  if (n < 1) throw std::invalid_argument("kernel_period_map: n >= 1");
  KernelPeriodResult r;
  r.n = n;
  for (int k = 1; 2 * k < n; ++k) r.pairs.emplace_back(k, n - k);
  const auto mons = monomials_of_degree(2, 2 * n);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < mons.size(); ++i) row_of[mons[i]] = i;
  RatMatrix A(mons.size(), r.pairs.size());
  for (std::size_t c = 0; c < r.pairs.size(); ++c) {
    r.images.push_back(three_term(Q(r.pairs[c].first, r.pairs[c].second)));
    for (const auto& [e, v] : r.images.back().terms()) A(row_of.at(e), c) = v;
  }
  r.kernel = r.pairs.empty() ? std::vector<std::vector<Rational>>{} : A.nullspace();
  r.rank = static_cast<int>(r.pairs.size() - r.kernel.size());

  const PeriodSpace W = build_W_plus(2 * n);
  auto combine = [&](const std::vector<Rational>& a) {
    MultiPoly p(2);
    for (std::size_t c = 0; c < a.size(); ++c)
      if (a[c] != 0) p += Q(r.pairs[c].first, r.pairs[c].second) * a[c];
    return p;
  };
  // kernel -> W^+
  r.equivalence = true;
  for (const auto& a : r.kernel) r.equivalence = r.equivalence && is_even_period_polynomial(combine(a), 2 * n);
  // W^+ -> kernel: read a_{k,l} off the coefficient of X^{2k} Y^{2l}
  for (const auto& P : W.basis) {
    std::vector<Rational> a(r.pairs.size());
    for (std::size_t c = 0; c < a.size(); ++c) a[c] = P.coeff({2 * r.pairs[c].first, 2 * r.pairs[c].second});
    bool in_kernel = combine(a) == P;
    for (std::size_t i = 0; i < mons.size() && in_kernel; ++i) {
      Rational s;
      for (std::size_t c = 0; c < a.size(); ++c) s += A(i, c) * a[c];
      in_kernel = s == 0;
    }
    r.equivalence = r.equivalence && in_kernel;
  }

  const int cusp = cusp_dim(2 * n + 2);
  r.dims = r.kernel.size() == W.basis.size() && static_cast<int>(W.basis.size()) == cusp;
  r.rank_bound = r.rank <= dims_check(n).dim_im && r.rank == (n - 1) / 2 - cusp && r.rank == n / 3;
  return r;
}

Functional pairing_functional(int a, int n) {
  if (a < 0 || 2 * a > n) throw std::invalid_argument("pairing_functional: need 0 <= 2a <= n");
  return Functional{{Exponent{2 * n - 2 * a + 2, 0, 2 * a}, Rational(1, 4)}};
}

Functional pairing_functional_from_blocks(int a, int n) {
  if (a < 0 || 2 * a > n) throw std::invalid_argument("pairing_functional_from_blocks: need 0 <= 2a <= n");
  // zeta^l(2a+1, 2n-2a+3) = (-1)^n/4 sum_s zeta^l({2}^s, 4, {2}^{n-s})
  Functional F;
  const Rational outer = Rational(n % 2 ? -1 : 1, 4);
  for (int s = a; s <= n - a; ++s) {
    const auto sw = index_to_word(index_2242(s, n - s));
    const auto l = block_decomposition(sw.word);
    if (l.size() != 3) throw std::logic_error("pairing_functional_from_blocks: expected three blocks");
    const Rational c = outer * sw.sign;
    auto bump = [&](Exponent e, const Rational& v) {
      if (e[0] < 0 || e[1] < 0 || e[2] < 0) return;
      auto& x = F[e];
      x += v;
      if (x == 0) F.erase(e);
    };
    bump({l[0] - 2, l[1] - 1, l[2] - 1}, c);
    bump({l[0] - 1, l[1] - 1, l[2] - 2}, -c);
  }
  return F;
}

Rational apply_functional(const Functional& F, const MultiPoly& f) {
  Rational s;
  for (const auto& [e, c] : F) s += c * f.coeff(e);
  return s;
}

DimsRow dims_row(int n) {
  DimsRow row;
  row.n = n;
  const auto d = dims_check(n);
  row.dim_im = d.dim_im;
  row.dim_ker = d.dim_ker;
  row.dims_pass = d.pass;
  row.dim_W = static_cast<int>(build_W_plus(2 * n).basis.size());
  row.cusp = cusp_dim(2 * n + 2);
  row.kernel_period_pass = kernel_period_map(n).pass();
  return row;
}

std::vector<DimsRow> dims_table_serial(int n_max) {
  std::vector<DimsRow> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(dims_row(n));
  return out;
}

std::vector<DimsRow> dims_table_parallel(int n_max, int jobs) {
  std::vector<DimsRow> out(n_max > 0 ? n_max : 0);
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1)
  for (int n = 1; n <= n_max; ++n) out[n - 1] = dims_row(n);
  return out;
}

}  // namespace mzv
