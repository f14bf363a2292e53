#include "mzv/exactalg.hpp"

#include <sstream>
#include <stdexcept>

namespace mzv {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("nvars mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("nvars mismatch");
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(nvars_, 1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b;
    if (e > 1) b = b * b;
  }
  return r;
}

int MultiPoly::homogeneous_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (d >= 0 && s != d) return -1;
    d = s;
  }
  return d;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    os << (first ? "" : " + ") << c;
    for (int i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      os << '*' << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1));
      if (e[i] > 1) os << '^' << e[i];
    }
    first = false;
  }
  return os.str();
}

MultiPoly poly_substitute(const MultiPoly& p, const std::vector<MultiPoly>& assignment) {
  if (static_cast<int>(assignment.size()) != p.nvars())
    throw std::invalid_argument("poly_substitute: assignment length != nvars");
  if (assignment.empty()) return p;
  const int m = assignment[0].nvars();
  for (const auto& a : assignment)
    if (a.nvars() != m) throw std::invalid_argument("poly_substitute: mixed variable counts");
  // powers[i][k] = assignment[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(assignment.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(MultiPoly::constant(m, 1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * assignment[i]);
    return v[k];
  };
  MultiPoly r(m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    r += t;
  }
  return r;
}

std::vector<Exponent> monomials_of_degree(int nvars, int d) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  // recursive fill with the first variable taking the largest exponent first
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) return out;
  rec(rec, 0, d);
  return out;
}

}  // namespace mzv
