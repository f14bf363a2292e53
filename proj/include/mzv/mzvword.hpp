#pragma once

#include "mzv/exactalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mzv {

/// Letters 0, +1, -1 of I(0; a_1, ..., a_n; 1), stored left to right.
using Letter = std::int8_t;
using Word = std::vector<Letter>;

struct Part {
  int k = 1;
  int eps = 1;  // +1 or -1 (barred)
  auto operator<=>(const Part&) const = default;
};

/// zeta_l(k_1^{e_1}, ..., k_d^{e_d}); the first part is the innermost summation.
struct SignedIndex {
  std::vector<Part> parts;
  int lead_zeros = 0;

  SignedIndex() = default;
  SignedIndex(std::vector<Part> p, int l = 0) : parts(std::move(p)), lead_zeros(l) {}

  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }
  bool convergent() const;
  bool classical() const;
  auto operator<=>(const SignedIndex&) const = default;
};

/// Shorthand: signed integers, negative entries barred. idx({2,-2}) = zeta(2, 2bar).
SignedIndex idx(std::initializer_list<int> ks, int lead_zeros = 0);
SignedIndex idx_from(const std::vector<int>& ks, int lead_zeros = 0);

/// Sorted multiset of indices; the empty monomial is the constant 1.
using Monomial = std::vector<SignedIndex>;

int monomial_weight(const Monomial& m);

/// Exact rational combination of products of constants.
class LinComb {
 public:
  LinComb() = default;
  static LinComb constant(const Rational& c);
  static LinComb single(const SignedIndex& i, const Rational& c = 1);
  static LinComb mono(Monomial m, const Rational& c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  void add(const LinComb& o, const Rational& c = 1);
  LinComb& operator+=(const LinComb& o) { add(o, 1); return *this; }
  LinComb& operator-=(const LinComb& o) { add(o, -1); return *this; }
  LinComb& operator*=(const Rational& c);
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend LinComb operator*(const LinComb& a, const LinComb& b);
  LinComb operator-() const { return *this * Rational(-1); }
  bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinComb& o) const { return !(*this == o); }

  bool all_convergent() const;
  /// -1 if monomials have mixed weights.
  int homogeneous_weight() const;
  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;
};

using WordComb = std::map<Word, Rational>;
using IndexComb = std::map<SignedIndex, Rational>;

void add_to(WordComb& a, const Word& w, const Rational& c);

// ---- text syntax -------------------------------------------------------

std::string format_index(const SignedIndex& i);
SignedIndex parse_index(const std::string& s);
std::string format_word(const Word& w);
Word parse_word(const std::string& s);

// ---- dictionary --------------------------------------------------------

struct SignedWord {
  int sign;
  Word word;
};
struct SignedIdx {
  int sign;
  SignedIndex index;
};

/// zeta_l(k; e) = (-1)^d I(0; 0^l, eta_1, 0^{k_1-1}, ..., eta_d, 0^{k_d-1}; 1)
/// with eta_i = e_i ... e_d.
SignedWord index_to_word(const SignedIndex& i);
SignedIdx word_to_index(const Word& w);

bool word_convergent(const Word& w);
int word_sign_count(const Word& w);  // number of -1 letters

// ---- blocks and duality ------------------------------------------------

std::vector<int> block_decomposition(const Word& w);
int block_degree(const Word& w);
SignedWord dual_word(const Word& w);

// ---- products ----------------------------------------------------------

WordComb shuffle(const Word& u, const Word& v);
WordComb shuffle(const WordComb& u, const WordComb& v);
/// Quasi-shuffle with (k,e) merge (k',e') = (k+k', e e').
IndexComb stuffle(const SignedIndex& a, const SignedIndex& b);

// ---- regularisation ----------------------------------------------------

/// zeta_l^{sh,T=0}(k) as a combination of convergent indices (regularisation
/// formula); throws if the tail (k_d, e_d) is (1,+1).
LinComb shuffle_regularize(const SignedIndex& i);

/// Shuffle regularisation at T=0 of I(0; w; 1) for any word, with
/// I(0;1;1) -> 0 and I(0;0;1) -> 0.
LinComb lift_divergent_word(const Word& w);
/// Same for an index: convergent indices map to themselves.
LinComb lift_index(const SignedIndex& i);

/// zeta^r: sum over comma/merge choices weighted r^{#merges}.
LinComb interp_expand(const SignedIndex& i, const Rational& r);

/// Convert a combination of words I(0;w;1) (all convergent) to a LinComb.
LinComb words_to_lincomb(const WordComb& wc);

}  // namespace mzv
