#include "mzv/mzvword.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mzv {

std::string format_index(const SignedIndex& i) {
  std::ostringstream os;
  os << "zeta";
  if (i.lead_zeros) os << "[l=" << i.lead_zeros << ']';
  os << '(';
  for (std::size_t j = 0; j < i.parts.size(); ++j) {
    if (j) os << ',';
    os << (i.parts[j].eps < 0 ? -i.parts[j].k : i.parts[j].k);
  }
  os << ')';
  return os.str();
}

SignedIndex parse_index(const std::string& s) {
  std::size_t p = 0;
  auto fail = [&]() -> SignedIndex { throw std::invalid_argument("bad index syntax: " + s); };
  auto expect = [&](const std::string& lit) {
    if (s.compare(p, lit.size(), lit) != 0) fail();
    p += lit.size();
  };
  auto number = [&]() {
    std::size_t q = p;
    if (q < s.size() && s[q] == '-') ++q;
    std::size_t digits = q;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == digits) fail();
    int v = std::stoi(s.substr(p, q - p));
    p = q;
    return v;
  };
  SignedIndex r;
  expect("zeta");
  if (p < s.size() && s[p] == '[') {
    expect("[l=");
    r.lead_zeros = number();
    if (r.lead_zeros < 0) fail();
    expect("]");
  }
  expect("(");
  while (true) {
    int k = number();
    if (k == 0) fail();
    r.parts.push_back({k < 0 ? -k : k, k < 0 ? -1 : 1});
    if (p < s.size() && s[p] == ',') {
      ++p;
      continue;
    }
    break;
  }
  expect(")");
  if (p != s.size()) fail();
  return r;
}

std::string format_word(const Word& w) {
  std::string s;
  for (Letter a : w) s += a == 0 ? '0' : a == 1 ? '1' : 'm';
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  for (char c : s) {
    if (c == '0') w.push_back(0);
    else if (c == '1') w.push_back(1);
    else if (c == 'm') w.push_back(-1);
    else throw std::invalid_argument("bad word syntax: " + s);
  }
  return w;
}

SignedWord index_to_word(const SignedIndex& i) {
  SignedWord r{i.depth() % 2 ? -1 : 1, Word(i.lead_zeros, 0)};
  int eta = 1;
  std::vector<int> etas(i.parts.size());
  for (std::size_t j = i.parts.size(); j-- > 0;) {
    eta *= i.parts[j].eps;
    etas[j] = eta;
  }
  for (std::size_t j = 0; j < i.parts.size(); ++j) {
    r.word.push_back(static_cast<Letter>(etas[j]));
    r.word.insert(r.word.end(), i.parts[j].k - 1, 0);
  }
  return r;
}

SignedIdx word_to_index(const Word& w) {
  if (w.empty()) throw std::invalid_argument("word_to_index: empty word");
  SignedIdx r{1, {}};
  std::size_t p = 0;
  while (p < w.size() && w[p] == 0) ++p;
  r.index.lead_zeros = static_cast<int>(p);
  if (p == w.size()) throw std::invalid_argument("word_to_index: word has no nonzero letter");
  std::vector<int> etas;
  while (p < w.size()) {
    std::size_t q = p + 1;
    while (q < w.size() && w[q] == 0) ++q;
    etas.push_back(w[p]);
    r.index.parts.push_back({static_cast<int>(q - p), 1});
    p = q;
  }
  for (std::size_t j = 0; j < etas.size(); ++j)
    r.index.parts[j].eps = etas[j] * (j + 1 < etas.size() ? etas[j + 1] : 1);
  r.sign = etas.size() % 2 ? -1 : 1;
  return r;
}

bool word_convergent(const Word& w) { return w.empty() || (w.front() != 0 && w.back() != 1); }

int word_sign_count(const Word& w) {
  int c = 0;
  for (Letter a : w) c += a == -1;
  return c;
}

namespace {
void require_binary(const Word& w, const char* who) {
  for (Letter a : w)
    if (a == -1) throw std::invalid_argument(std::string(who) + ": letter -1 not allowed");
}
}  // namespace

std::vector<int> block_decomposition(const Word& w) {
  require_binary(w, "block_decomposition");
  Word ext;
  ext.reserve(w.size() + 2);
  ext.push_back(0);
  ext.insert(ext.end(), w.begin(), w.end());
  ext.push_back(1);
  std::vector<int> blocks;
  int len = 1;
  for (std::size_t i = 1; i < ext.size(); ++i) {
    if (ext[i] == ext[i - 1]) {
      blocks.push_back(len);
      len = 1;
    } else {
      ++len;
    }
  }
  blocks.push_back(len);
  return blocks;
}

int block_degree(const Word& w) {
  require_binary(w, "block_degree");
  int deg = 0;
  Letter prev = 0;
  for (Letter a : w) {
    deg += a == prev;
    prev = a;
  }
  return deg + (prev == 1);
}

SignedWord dual_word(const Word& w) {
  require_binary(w, "dual_word");
  SignedWord r{w.size() % 2 ? -1 : 1, Word(w.rbegin(), w.rend())};
  for (auto& a : r.word) a = static_cast<Letter>(1 - a);
  return r;
}

}  // namespace mzv
