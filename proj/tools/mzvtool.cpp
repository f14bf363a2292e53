// mzvtool: batch verification, dimension tables and the constant cache.
#include "mzv/blocklie.hpp"
#include "mzv/verify.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <nlohmann/json.hpp>

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitUsage = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::string dims_json(const std::vector<mzv::DimsRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = "mzv-dims/1";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    j["rows"].push_back({{"n", r.n},
                         {"dim_im", r.dim_im},
                         {"dim_ker", r.dim_ker},
                         {"dim_W", r.dim_W},
                         {"cusp_dim", r.cusp},
                         {"dims_pass", r.dims_pass},
                         {"kernel_period_pass", r.kernel_period_pass}});
  return j.dump(2) + "\n";
}

std::string dims_text(const std::vector<mzv::DimsRow>& rows) {
  std::ostringstream os;
  os << "n\tdim_im\tdim_ker\tdim_W\tcusp\tdims\tkernel_period\n";
  for (const auto& r : rows)
    os << r.n << '\t' << r.dim_im << '\t' << r.dim_ker << '\t' << r.dim_W << '\t' << r.cusp << '\t'
       << (r.dims_pass ? "pass" : "fail") << '\t' << (r.kernel_period_pass ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification of MZV identities"};
  app.require_subcommand(1);

  int digits = 50, jobs = 1;
  std::string tol = "1e-8", out, cache_path;
  bool json = false, timing = false;

  auto* verify = app.add_subcommand("verify", "Verify identity instances over parameter ranges");
  std::vector<std::string> ids;
  verify->add_option("ids", ids, "Identity ids, or 'all'")->required();
  std::map<std::string, std::string> range_text;
  for (const char* name : {"a", "b", "k", "l", "s", "t", "n", "r", "form", "p", "q"})
    verify->add_option(std::string("--") + name, range_text[name], "Range lo..hi or a single value");
  verify->add_option("--digits", digits, "Working precision in decimal digits")->check(CLI::Range(5, 1000));
  verify->add_option("--tol", tol, "Absolute tolerance on |delta| + err");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "Write the report to a file");
  verify->add_option("--cache", cache_path, "Constant cache file (read and updated)");
  verify->add_flag("--json", json, "JSON report");
  verify->add_flag("--timing", timing, "Include elapsed times");

  auto* dims = app.add_subcommand("dims", "Dimension table for V_n, W_2n^+ and cusp forms");
  int n_max = 6;
  std::string golden_dir;
  dims->add_option("n_max", n_max, "Largest n")->check(CLI::PositiveNumber);
  dims->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  dims->add_option("--out", out, "Write the table to a file");
  dims->add_option("--golden", golden_dir, "Also write vspace_<n>.json basis files into this directory");
  dims->add_flag("--json", json, "JSON table");

  auto* constants = app.add_subcommand("constants", "Precompute constants into the cache");
  int weight_max = 8;
  constants->add_option("--weight", weight_max, "Largest weight (at most 16)");
  constants->add_option("--digits", digits, "Decimal digits");
  constants->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  constants->add_option("--cache", cache_path, "Cache file")->required();

  auto* list = app.add_subcommand("list-identities", "List verifiable ids with their default ranges");
  list->add_flag("--json", json, "JSON list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& s : mzv::verify_specs()) {
          nlohmann::ordered_json d = nlohmann::ordered_json::object();
          for (const auto& [n, r] : s.defaults) d[n] = std::to_string(r.first) + ".." + std::to_string(r.second);
          j.push_back({{"id", s.id}, {"params", s.params}, {"defaults", d}, {"exact", s.exact}, {"summary", s.summary}});
        }
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& s : mzv::verify_specs()) {
          std::cout << s.id;
          for (const auto& p : s.params) {
            std::cout << ' ' << p;
            if (auto it = s.defaults.find(p); it != s.defaults.end())
              std::cout << '=' << it->second.first << ".." << it->second.second;
          }
          std::cout << "  " << (s.exact ? "[exact] " : "") << s.summary << '\n';
        }
      }
      return kExitPass;
    }

    if (*constants) {
      mzv::ConstCache cache;
      cache.load(cache_path);
      const auto n = mzv::precompute_constants(cache, weight_max, digits, jobs);
      cache.save(cache_path);
      std::cout << n << " constants at " << digits << " digits in " << cache_path << '\n';
      return kExitPass;
    }

    if (*dims) {
      const auto rows = jobs > 1 ? mzv::dims_table_parallel(n_max, jobs) : mzv::dims_table_serial(n_max);
      if (!golden_dir.empty()) {
        std::filesystem::create_directories(golden_dir);
        for (int n = 1; n <= n_max; ++n)
          std::ofstream(std::filesystem::path(golden_dir) / ("vspace_" + std::to_string(n) + ".json"))
              << mzv::vspace_golden_json(n) << '\n';
      }
      emit(json ? dims_json(rows) : dims_text(rows), out);
      bool ok = true;
      for (const auto& r : rows) ok = ok && r.dims_pass && r.kernel_period_pass;
      return ok ? kExitPass : kExitFail;
    }

    // verify
    std::map<std::string, std::pair<int, int>> ranges;
    for (const auto& [name, text] : range_text)
      if (!text.empty()) ranges[name] = mzv::parse_range(text);
    if (ids.size() == 1 && ids[0] == "all") {
      ids.clear();
      for (const auto& s : mzv::verify_specs()) ids.push_back(s.id);
    }
    std::vector<mzv::Job> all;
    for (const auto& id : ids) {
      auto js = mzv::expand_jobs(id, ranges);
      all.insert(all.end(), js.begin(), js.end());
    }
    mzv::ConstCache cache;
    if (!cache_path.empty()) cache.load(cache_path);
    mzv::VerifyOptions opt;
    opt.digits = digits;
    opt.tolerance = tol;
    opt.jobs = jobs;
    opt.cache = cache_path.empty() ? nullptr : &cache;
    std::stod(tol);
    const auto rep = mzv::run_jobs(all, opt);
    if (!cache_path.empty()) cache.save(cache_path);
    if (rep.runs.empty()) {
      std::cerr << "no instance of the requested ranges satisfies the identity's preconditions\n";
      return kExitUsage;
    }
    emit(json ? rep.to_json(timing) : rep.to_text(timing), out);
    return rep.all_pass() ? kExitPass : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
