#include "mzv/numeval.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <mutex>

namespace mzv {

bool ConstCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    // unreadable file: treat every entry as corrupt
    std::unique_lock lk(mu_);
    ++dropped_;
    return true;
  }
  std::unique_lock lk(mu_);
  if (!j.is_object()) {
    ++dropped_;
    return true;
  }
  for (const auto& [key, v] : j.items()) {
    try {
      parse_index(key);
      Entry e{v.at("value").get<std::string>(), v.at("err").get<std::string>(), v.at("digits").get<int>()};
      Real::from_string(e.value, 64);
      Real::from_string(e.err, 64);
      if (e.digits <= 0) throw std::invalid_argument("digits");
      entries_[key] = e;
    } catch (const std::exception&) {
      ++dropped_;
    }
  }
  return true;
}

void ConstCache::save(const std::string& path) const {
  nlohmann::json j = nlohmann::json::object();
  {
    std::shared_lock lk(mu_);
    for (const auto& [k, e] : entries_) j[k] = {{"value", e.value}, {"err", e.err}, {"digits", e.digits}};
  }
  std::ofstream out(path);
  out << j.dump(1) << '\n';
}

bool ConstCache::lookup(const std::string& key, int digits, BigReal& out) const {
  Entry e;
  {
    std::shared_lock lk(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return false;
    e = it->second;
  }
  if (e.digits < digits) return false;
  try {
    const mpfr_prec_t prec = bits_for_digits(e.digits) + 16;
    Real v = Real::from_string(e.value, prec);
    Real err = Real::from_string(e.err, 64);
    // decimal-to-binary conversion error
    err = errb::add(err, errb::ulp_bound(v));
    if (err > errb::pow10(-digits)) return false;
    out = BigReal(std::move(v), std::move(err));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void ConstCache::store(const std::string& key, const BigReal& v, int digits) {
  // value printed with 8 extra digits; the rounding is absorbed into err
  const int sig = digits + 8;
  Entry e;
  e.value = v.value.str(sig);
  Real printed = Real::from_string(e.value, v.value.prec());
  Real conv = errb::from_real(printed - v.value);
  Real err = errb::add(errb::add(v.err, conv), errb::ulp_bound(v.value));
  // err rounded up in its decimal form
  Real up = errb::add(err, errb::mul(err, errb::from_double(1e-6)));
  e.err = up.str(6);
  e.digits = digits;
  std::unique_lock lk(mu_);
  entries_[key] = e;
}

std::size_t ConstCache::size() const {
  std::shared_lock lk(mu_);
  return entries_.size();
}

std::vector<BigReal> eval_batch_serial(const std::vector<SignedIndex>& xs, int digits) {
  std::vector<BigReal> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(eval_index(x, digits));
  return out;
}

std::vector<BigReal> eval_batch_parallel(const std::vector<SignedIndex>& xs, int digits, int jobs) {
  std::vector<BigReal> out(xs.size());
  const long n = static_cast<long>(xs.size());
  std::string error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 0 ? jobs : 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = eval_index(xs[i], digits);
    } catch (const std::exception& e) {
#pragma omp critical(mzv_batch_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error(error);
  return out;
}

BigReal Evaluator::index(const SignedIndex& i) {
  {
    std::shared_lock lk(mu_);
    if (auto it = memo_.find(i); it != memo_.end()) return it->second;
  }
  BigReal v;
  const std::string key = format_index(i);
  if (!(cache_ && cache_->lookup(key, digits_, v))) {
    v = eval_index(i, digits_);
    if (cache_) cache_->store(key, v, digits_);
  }
  std::unique_lock lk(mu_);
  return memo_.emplace(i, v).first->second;
}

void Evaluator::prefetch(const std::vector<SignedIndex>& xs, int jobs) {
  std::vector<SignedIndex> todo;
  {
    std::shared_lock lk(mu_);
    for (const auto& x : xs)
      if (!memo_.count(x)) todo.push_back(x);
  }
  std::sort(todo.begin(), todo.end());
  todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
  const long n = static_cast<long>(todo.size());
  std::string error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
  for (long q = 0; q < n; ++q) {
    try {
      index(todo[q]);
    } catch (const std::exception& e) {
#pragma omp critical(mzv_prefetch_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error(error);
}

void Evaluator::prefetch(const LinComb& c, int jobs) {
  std::vector<SignedIndex> xs;
  for (const auto& [m, coef] : c.terms())
    for (const auto& i : m) xs.push_back(i);
  prefetch(xs, jobs);
}

BigReal Evaluator::lincomb(const LinComb& c) {
  const mpfr_prec_t prec = bits_for_digits(digits_) + 16;
  BigReal total(Real(prec), errb::zero());
  for (const auto& [m, coef] : c.terms()) {
    BigReal t = BigReal::exact(1, prec);
    for (const auto& i : m) t = t * index(i);
    total = total + t.scaled(coef);
  }
  return total;
}

}  // namespace mzv
