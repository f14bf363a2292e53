#include "mzv/blocklie.hpp"

#include <array>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace mzv {

namespace {

constexpr int kVars = 3;

// f(x_{p[0]}, x_{p[1]}, x_{p[2]})
MultiPoly permute(const MultiPoly& f, const std::array<int, 3>& p) {
  MultiPoly r(kVars);
  for (const auto& [e, c] : f.terms()) {
    Exponent ne(kVars, 0);
    for (int t = 0; t < kVars; ++t) ne[p[t]] += e[t];
    r.add_term(ne, c);
  }
  return r;
}

struct Perm {
  std::array<int, 3> p;
  int sign;
};
const std::array<Perm, 6> kS3 = {{{{0, 1, 2}, 1},
                                  {{1, 2, 0}, 1},
                                  {{2, 0, 1}, 1},
                                  {{1, 0, 2}, -1},
                                  {{2, 1, 0}, -1},
                                  {{0, 2, 1}, -1}}};

// projection onto the sign isotypic component
MultiPoly sign_part(const MultiPoly& f) {
  MultiPoly r(kVars);
  for (const auto& g : kS3) r += permute(f, g.p) * Rational(g.sign);
  return r * Rational(1, 6);
}

MultiPoly var(int nv, int i) { return MultiPoly::variable(nv, i); }

MultiPoly derivative(const MultiPoly& f, int i) {
  MultiPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent ne = e;
    --ne[i];
    r.add_term(ne, c * e[i]);
  }
  return r;
}

MultiPoly rel3_operator(const MultiPoly& f) {
  MultiPoly g = f;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      g = derivative(g, 0) + derivative(g, 1) * Rational(s1) + derivative(g, 2) * Rational(s1 * s2);
  return g;
}

// 1/2 (f(0,y,z) - f(0,y,-z)) - (f(-y,y,z) - f(y,-z,z)) in Q[y, z]
MultiPoly rel2_residual(const MultiPoly& f) {
  const MultiPoly y = var(2, 0), z = var(2, 1), zero(2);
  const MultiPoly a = poly_substitute(f, {zero, y, z});
  const MultiPoly b = poly_substitute(f, {zero, y, -z});
  const MultiPoly c = poly_substitute(f, {-y, y, z});
  const MultiPoly d = poly_substitute(f, {y, -z, z});
  return (a - b) * Rational(1, 2) - (c - d);
}

std::vector<Rational> coords(const MultiPoly& f, const std::vector<Exponent>& mons) {
  std::vector<Rational> v(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) v[i] = f.coeff(mons[i]);
  return v;
}

MultiPoly from_coords(const std::vector<Rational>& v, const std::vector<Exponent>& mons) {
  MultiPoly f(static_cast<int>(mons[0].size()));
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (v[i] != 0) f.add_term(mons[i], v[i]);
  return f;
}

// canonical basis of span(polys): nonzero rows of the rref in graded-lex order
std::vector<MultiPoly> echelon(const std::vector<MultiPoly>& polys, int nv, int deg) {
  const auto mons = monomials_of_degree(nv, deg);
  if (polys.empty()) return {};
  RatMatrix m(0, mons.size());
  for (const auto& p : polys) m.append_row(coords(p, mons));
  std::vector<std::size_t> piv;
  const RatMatrix r = m.rref(&piv);
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    std::vector<Rational> row(mons.size());
    for (std::size_t j = 0; j < mons.size(); ++j) row[j] = r(i, j);
    out.push_back(from_coords(row, mons));
  }
  return out;
}

// combinations sum_b c_b basis[b] annihilated by every linear map in `maps`
std::vector<MultiPoly> impose(const std::vector<MultiPoly>& basis,
                              const std::vector<std::vector<MultiPoly>>& images, int nv, int deg) {
  if (basis.empty()) return {};
  // collect the monomials appearing in the images
  std::vector<std::map<Exponent, std::size_t>> rows(images.size());
  std::size_t nrows = 0;
  for (std::size_t m = 0; m < images.size(); ++m)
    for (const auto& img : images[m])
      for (const auto& [e, c] : img.terms())
        if (!rows[m].count(e)) rows[m][e] = nrows++;
  RatMatrix A(nrows, basis.size());
  for (std::size_t m = 0; m < images.size(); ++m)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [e, c] : images[m][b].terms()) A(rows[m][e], b) = c;
  std::vector<MultiPoly> out;
  if (nrows == 0) {
    out = basis;
  } else {
    for (const auto& v : A.nullspace()) {
      MultiPoly f(nv);
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (v[b] != 0) f += basis[b] * v[b];
      out.push_back(f);
    }
  }
  return echelon(out, nv, deg);
}

}  // namespace

std::vector<MultiPoly> span_generators(int n) {
  if (n < 1) throw std::invalid_argument("span_generators: n >= 1");
  const MultiPoly x1 = var(kVars, 0), x2 = var(kVars, 1), x3 = var(kVars, 2);
  std::vector<MultiPoly> out;
  for (int i = 0; i <= 2 * n; ++i) {
    const int j = 2 * n - i;
    for (int s2 : {-1, 1})
      for (int s1 : {-1, 1}) out.push_back((x1 + x2 * Rational(s1)).pow(i) * (x2 + x3 * Rational(s2)).pow(j));
  }
  return out;
}

std::vector<MultiPoly> differential_kernel(int n) {
  if (n < 1) throw std::invalid_argument("differential_kernel: n >= 1");
  std::vector<MultiPoly> mons;
  for (const auto& e : monomials_of_degree(kVars, 2 * n)) mons.push_back(MultiPoly::monomial(e));
  std::vector<MultiPoly> imgs;
  for (const auto& m : mons) imgs.push_back(rel3_operator(m));
  return impose(mons, {imgs}, kVars, 2 * n);
}

VSpace build_Vn(int n, Rel3Mode mode) {
  if (n < 1) throw std::invalid_argument("build_Vn: n >= 1");
  std::vector<MultiPoly> start;
  if (mode == Rel3Mode::Span) {
    for (const auto& g : span_generators(n)) start.push_back(sign_part(g));
  } else {
    for (const auto& e : monomials_of_degree(kVars, 2 * n)) start.push_back(sign_part(MultiPoly::monomial(e)));
  }
  const auto sign_basis = echelon(start, kVars, 2 * n);
  std::vector<std::vector<MultiPoly>> images(1);
  for (const auto& b : sign_basis) images[0].push_back(rel2_residual(b));
  if (mode == Rel3Mode::Differential) {
    images.emplace_back();
    for (const auto& b : sign_basis) images[1].push_back(rel3_operator(b));
  }
  VSpace v;
  v.n = n;
  v.basis = impose(sign_basis, images, kVars, 2 * n);
  return v;
}

RelationCheck check_relations(const MultiPoly& f, int n) {
  RelationCheck r;
  r.rel0 = f.is_zero() || f.homogeneous_degree() == 2 * n;
  r.rel1 = permute(f, {1, 2, 0}) == f && permute(f, {2, 1, 0}) == -f;
  r.rel2 = rel2_residual(f).is_zero();
  r.rel3 = rel3_operator(f).is_zero();
  return r;
}

MultiPoly project_Pe(const MultiPoly& f) {
  MultiPoly r(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    bool even = true;
    for (int x : e) even = even && x % 2 == 0;
    if (even) r.add_term(e, c);
  }
  return r;
}

std::vector<MultiPoly> image_Pe_basis(int n) {
  std::vector<MultiPoly> im;
  for (const auto& b : build_Vn(n).basis) im.push_back(project_Pe(b));
  return echelon(im, kVars, 2 * n);
}

DimsResult dims_check(int n) {
  DimsResult r;
  r.n = n;
  const auto V = build_Vn(n);
  r.dim_V = static_cast<int>(V.basis.size());
  std::vector<MultiPoly> im;
  for (const auto& b : V.basis) im.push_back(project_Pe(b));
  r.dim_im = static_cast<int>(echelon(im, kVars, 2 * n).size());
  r.dim_ker = r.dim_V - r.dim_im;
  r.pass = r.dim_im == n / 3 && r.dim_ker == (n - 1) / 2;
  return r;
}

MultiPoly eta_generator(int i, int j) {
  const MultiPoly x1 = var(kVars, 0), x2 = var(kVars, 1), x3 = var(kVars, 2);
  const Rational s = i % 2 ? -1 : 1;
  const MultiPoly a = (x1 - x2).pow(i), b = (x1 + x2).pow(i) * s;
  return (a + b) * ((x2 - x3).pow(j) + (x2 + x3).pow(j));
}

EtaDecomp eta_decompose(const MultiPoly& f, int n) {
  if (n < 1) throw std::invalid_argument("eta_decompose: n >= 1");
  if (!f.is_zero() && f.homogeneous_degree() != 2 * n) throw std::invalid_argument("eta_decompose: degree must be 2n");
  const int N = 2 * n;
  const auto mons = monomials_of_degree(kVars, N);
  RatMatrix A(mons.size(), N + 1);
  for (int i = 0; i <= N; ++i) {
    const auto g = eta_generator(i, N - i);
    for (std::size_t r = 0; r < mons.size(); ++r) A(r, i) = g.coeff(mons[r]);
  }
  std::vector<Rational> rhs = coords(f, mons);

  EtaDecomp d;
  d.n = n;
  std::vector<Rational> x;
  d.solvable = A.solve(rhs, x);
  if (!d.solvable) throw std::domain_error("eta_decompose: f is not in the span of the eta generators");

  // eta_{i,j} + eta_{j,i} = 0 and the Bernoulli recursion, indexed by i
  std::vector<std::vector<Rational>> extra;
  for (int i = 0; i <= N; ++i) {
    std::vector<Rational> row(N + 1);
    row[i] += 1;
    row[N - i] += 1;
    extra.push_back(row);
  }
  for (int b = 1; b <= n; ++b) {
    const int a = n - b;
    std::vector<Rational> row(N + 1);
    row[2 * a + 1] += 2 * a + 1;
    for (int s = 0; s <= b; ++s) row[2 * a + 2 * s] -= 2 * binom(2 * a + 2 * s, 2 * a) * bernoulli(2 * s);
    extra.push_back(row);
  }
  RatMatrix B = A;
  std::vector<Rational> rhs2 = rhs;
  for (const auto& row : extra) {
    B.append_row(row);
    rhs2.push_back(0);
  }
  std::vector<Rational> y;
  d.augmented_solvable = B.solve(rhs2, y);
  if (d.augmented_solvable) x = y;

  for (int i = 0; i <= N; ++i) d.eta[{i, N - i}] = x[i];
  auto eta = [&](int i) { return x[i]; };
  d.antisymmetric = true;
  for (int i = 0; i <= N; ++i) d.antisymmetric = d.antisymmetric && eta(i) == -eta(N - i);
  d.recursion = true;
  for (int b = 1; b <= n; ++b) {
    const int a = n - b;
    Rational s2;
    for (int s = 0; s <= b; ++s) s2 += binom(2 * a + 2 * s, 2 * a) * bernoulli(2 * s) * eta(2 * a + 2 * s);
    d.recursion = d.recursion && (2 * a + 1) * eta(2 * a + 1) == 2 * s2;
  }
  d.alpha_is_4eta = d.eta_is_4alpha = true;
  for (int i = 0; i <= N; i += 2) {
    const Rational alpha = f.coeff({i, 0, N - i});
    d.alpha_is_4eta = d.alpha_is_4eta && alpha == 4 * eta(i);
    d.eta_is_4alpha = d.eta_is_4alpha && eta(i) == 4 * alpha;
  }
  return d;
}

std::string vspace_golden_json(int n) {
  const auto V = build_Vn(n);
  const auto dims = dims_check(n);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["dim_V"] = dims.dim_V;
  j["dim_im"] = dims.dim_im;
  j["dim_ker"] = dims.dim_ker;
  j["basis"] = nlohmann::ordered_json::array();
  for (const auto& b : V.basis) {
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
      const auto& e = it->first;
      p[std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2])] = to_string(it->second);
    }
    j["basis"].push_back(p);
  }
  return j.dump(2);
}

}  // namespace mzv
