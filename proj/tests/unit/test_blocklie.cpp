#include "mzv/blocklie.hpp"

#include <doctest.h>

using namespace mzv;

namespace {

MultiPoly x(int i) { return MultiPoly::variable(3, i); }
MultiPoly y(int i) { return MultiPoly::variable(2, i); }

// dimension of the span of `ps` inside degree-d polynomials in `nv` variables
std::size_t span_dim(const std::vector<MultiPoly>& ps, int nv, int d) {
  const auto mons = monomials_of_degree(nv, d);
  RatMatrix M(ps.size(), mons.size());
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) M(i, j) = ps[i].coeff(mons[j]);
  return M.rank();
}

}  // namespace

TEST_CASE("dimensions of the image and kernel of P_e") {
  // dim im = floor(n/3), dim ker = floor((n-1)/2)
  const int expect[][3] = {{3, 1, 1}, {5, 1, 2}, {6, 2, 2}, {7, 2, 3}, {12, 4, 5}};
  for (const auto& e : expect) {
    const auto d = dims_check(e[0]);
    CHECK(d.dim_im == e[1]);
    CHECK(d.dim_ker == e[2]);
    CHECK(d.dim_V == e[1] + e[2]);
    CHECK(d.pass);
    CHECK(static_cast<int>(image_Pe_basis(e[0]).size()) == e[1]);
  }
}

TEST_CASE("span and differential characterisations agree") {
  for (int n = 1; n <= 8; ++n) {
    const auto a = build_Vn(n, Rel3Mode::Span);
    const auto b = build_Vn(n, Rel3Mode::Differential);
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
    for (const auto& f : a.basis) CHECK(check_relations(f, n).all());
    // the differential kernel has dimension 8n - 2
    CHECK(differential_kernel(n).size() == static_cast<std::size_t>(8 * n - 2));
    CHECK(span_dim(span_generators(n), 3, 2 * n) == static_cast<std::size_t>(8 * n - 2));
  }
  CHECK_FALSE(check_relations(x(0).pow(6), 3).all());
}

TEST_CASE("even projection") {
  const MultiPoly f = x(0).pow(2) * x(1) * x(2) + x(0).pow(2) * x(1).pow(2) - x(2).pow(3) * x(0);
  CHECK(project_Pe(f) == x(0).pow(2) * x(1).pow(2));
  CHECK(project_Pe(project_Pe(f)) == project_Pe(f));
  for (int n = 2; n <= 6; ++n)
    for (const auto& g : build_Vn(n).basis) CHECK(project_Pe(project_Pe(g)) == project_Pe(g));
}

TEST_CASE("even period polynomials") {
  CHECK(build_W_plus(8).basis.empty());
  const auto w10 = build_W_plus(10);
  REQUIRE(w10.basis.size() == 1);
  // x1^2 x2^2 (x1^2 - x2^2)^3 spans W_10^+
  const MultiPoly p = y(0).pow(2) * y(1).pow(2) * (y(0).pow(2) - y(1).pow(2)).pow(3);
  CHECK(is_even_period_polynomial(p, 10));
  CHECK(span_dim({w10.basis[0], p}, 2, 10) == 1);
  CHECK(build_W_plus(22).basis.size() == 2);
  CHECK_FALSE(is_even_period_polynomial(y(0).pow(10) - y(1).pow(10), 10));
  for (const auto& b : build_W_plus(22).basis) CHECK(is_even_period_polynomial(b, 22));
}

TEST_CASE("cusp form dimensions") {
  CHECK(cusp_dim(10) == 0);
  CHECK(cusp_dim(12) == 1);
  CHECK(cusp_dim(24) == 2);
  for (int k = 4; k <= 62; k += 2) CHECK(cusp_dim(k) == cusp_dim_classical(k));
  for (int two_n = 4; two_n <= 30; two_n += 2)
    CHECK(static_cast<int>(build_W_plus(two_n).basis.size()) == cusp_dim(two_n + 2));
  CHECK_THROWS_AS(cusp_dim(11), std::invalid_argument);
  CHECK_THROWS_AS(cusp_dim(2), std::invalid_argument);
}

TEST_CASE("kernel of the period map") {
  const auto k2 = kernel_period_map(2);
  CHECK(k2.pairs.empty());
  CHECK(k2.kernel.empty());
  CHECK(k2.pass());
  const auto k4 = kernel_period_map(4);
  CHECK(k4.kernel.empty());
  CHECK(k4.pass());
  const auto k5 = kernel_period_map(5);
  CHECK(k5.kernel.size() == 1);
  CHECK(k5.pass());
  CHECK(kernel_period_map(11).kernel.size() == 2);
}

TEST_CASE("the pairing factors through the even projection") {
  for (int n = 1; n <= 6; ++n)
    for (int a = 0; 2 * a <= n; ++a) {
      const Functional F = pairing_functional(a, n);
      const Functional G = pairing_functional_from_blocks(a, n);
      for (const auto& f : build_Vn(n + 1).basis) CHECK(apply_functional(F, f) == apply_functional(G, f));
    }
  const Functional F = pairing_functional(1, 2);
  CHECK(apply_functional(F, x(0).pow(4) * x(2).pow(2)) == Rational(1, 4));
  CHECK(apply_functional(F, x(0).pow(2) * x(2).pow(4)) == 0);
}

TEST_CASE("eta decomposition") {
  // defined on im P_e
  for (int n = 3; n <= 7; ++n)
    for (const auto& f : image_Pe_basis(n)) {
      const auto e = eta_decompose(f, n);
      CHECK(e.solvable);
      CHECK(e.augmented_solvable);
      CHECK(e.antisymmetric);
      CHECK(e.recursion);
      CHECK(e.alpha_is_4eta);
    }
  const auto z = eta_decompose(MultiPoly(), 3);
  CHECK(z.solvable);
  CHECK(z.alpha_is_4eta);
  CHECK_THROWS_AS(eta_decompose(x(0).pow(6), 3), std::domain_error);
}

TEST_CASE("serial and parallel dimension tables agree") {
  const auto s = dims_table_serial(10);
  const auto p = dims_table_parallel(10, 4);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].n == p[i].n);
    CHECK(s[i].dim_im == p[i].dim_im);
    CHECK(s[i].dim_ker == p[i].dim_ker);
    CHECK(s[i].dim_W == p[i].dim_W);
    CHECK(s[i].dims_pass);
    CHECK(s[i].kernel_period_pass == p[i].kernel_period_pass);
  }
}
