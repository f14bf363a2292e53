#include "mzv/mzvword.hpp"

#include <algorithm>
#include <sstream>

namespace mzv {

int SignedIndex::weight() const {
  int w = lead_zeros;
  for (const auto& p : parts) w += p.k;
  return w;
}

bool SignedIndex::convergent() const {
  return lead_zeros == 0 && !parts.empty() && !(parts.back().k == 1 && parts.back().eps == 1);
}

bool SignedIndex::classical() const {
  for (const auto& p : parts)
    if (p.eps != 1) return false;
  return true;
}

SignedIndex idx_from(const std::vector<int>& ks, int lead_zeros) {
  SignedIndex r;
  r.lead_zeros = lead_zeros;
  for (int k : ks) r.parts.push_back({k < 0 ? -k : k, k < 0 ? -1 : 1});
  return r;
}

SignedIndex idx(std::initializer_list<int> ks, int lead_zeros) {
  return idx_from(std::vector<int>(ks), lead_zeros);
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (const auto& i : m) w += i.weight();
  return w;
}

LinComb LinComb::constant(const Rational& c) { return mono({}, c); }

LinComb LinComb::single(const SignedIndex& i, const Rational& c) { return mono({i}, c); }

LinComb LinComb::mono(Monomial m, const Rational& c) {
  std::sort(m.begin(), m.end());
  LinComb r;
  r.add(m, c);
  return r;
}

Rational LinComb::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LinComb::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LinComb::add(const LinComb& o, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, v] : o.terms_) add(m, c * v);
}

LinComb& LinComb::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      r.add(m, ca * cb);
    }
  return r;
}

bool LinComb::all_convergent() const {
  for (const auto& [m, c] : terms_)
    for (const auto& i : m)
      if (!i.convergent()) return false;
  return true;
}

int LinComb::homogeneous_weight() const {
  int w = -2;
  for (const auto& [m, c] : terms_) {
    int x = monomial_weight(m);
    if (w != -2 && w != x) return -1;
    w = x;
  }
  return w == -2 ? 0 : w;
}

std::string LinComb::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (const auto& i : m) os << '*' << format_index(i);
  }
  return os.str();
}

void add_to(WordComb& a, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = a.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

}  // namespace mzv
