#include "mzv/verify.hpp"

#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace mzv {

std::string status_name(RunStatus s) {
  switch (s) {
    case RunStatus::Pass: return "pass";
    case RunStatus::Fail: return "fail";
    case RunStatus::Skip: return "skip";
  }
  return "skip";
}

int Report::count(RunStatus s) const {
  int c = 0;
  for (const auto& r : runs) c += r.status == s;
  return c;
}

std::string Report::to_json(bool timing) const {
  using json = nlohmann::ordered_json;
  json j;
  j["schema"] = "mzv-report/1";
  j["digits"] = digits;
  j["tolerance"] = tolerance;
  j["summary"] = {{"runs", runs.size()},
                  {"pass", count(RunStatus::Pass)},
                  {"fail", count(RunStatus::Fail)},
                  {"skip", count(RunStatus::Skip)},
                  {"excluded", excluded}};
  j["runs"] = json::array();
  for (const auto& r : runs) {
    json p = json::object();
    for (const auto& [n, v] : r.params) p[n] = v;
    json x;
    x["id"] = r.id;
    x["params"] = p;
    x["status"] = status_name(r.status);
    x["mode"] = r.exact ? "exact" : "numeric";
    x["digits"] = r.exact ? 0 : r.digits;
    x["lhs"] = r.lhs;
    x["rhs"] = r.rhs;
    x["delta"] = r.delta;
    x["err"] = r.err;
    x["tolerance"] = r.tolerance;
    x["note"] = r.note;
    if (timing) x["elapsed"] = r.elapsed;
    j["runs"].push_back(x);
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& r : runs) {
    os << status_name(r.status) << "  " << r.id;
    for (const auto& [n, v] : r.params) os << ' ' << n << '=' << v;
    if (r.exact) os << "  exact";
    else os << "  |delta|=" << r.delta << " err=" << r.err << " tol=" << r.tolerance;
    if (timing) os << "  " << std::fixed << std::setprecision(3) << r.elapsed << "s" << std::defaultfloat;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << '\n';
  }
  os << count(RunStatus::Pass) << " pass, " << count(RunStatus::Fail) << " fail, " << count(RunStatus::Skip)
     << " skip";
  if (excluded) os << ", " << excluded << " excluded";
  os << '\n';
  return os.str();
}

std::pair<int, int> parse_range(const std::string& s) {
  auto to_int = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (t.empty() || used != t.size()) throw std::invalid_argument("bad range: " + s);
    return v;
  };
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(s);
    return {v, v};
  }
  const int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty range: " + s);
  return {lo, hi};
}

}  // namespace mzv
