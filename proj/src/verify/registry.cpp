#include "mzv/verify.hpp"

#include "mzv/coaction.hpp"
#include "mzv/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mzv {

const std::vector<VerifySpec>& verify_specs() {
  static const std::vector<VerifySpec> specs = [] {
    std::vector<VerifySpec> out;
    for (const auto& s : identity_specs()) {
      VerifySpec v;
      v.id = s.id;
      v.summary = s.summary;
      for (const auto& p : s.params) {
        v.params.push_back(p.name);
        v.defaults[p.name] = {p.lo, p.hi};
      }
      // exactness is a property of the instance; these ids build exact ones
      v.exact = s.id == "z2242-modprod" || s.id == "double-telescope";
      out.push_back(v);
    }
    out.push_back({"lemma-binomial", {"k", "l"}, {{"k", {1, 10}}, {"l", {1, 10}}},
                   "binomial identities (i) and (ii) for every valid r", true});
    out.push_back({"modprod-binomial", {"a", "b"}, {{"a", {0, 3}}, {"b", {0, 3}}},
                   "binomial identity and projected coaction of the modulo-products evaluation", true});
    for (const auto& f : family_names()) {
      const bool pq = f == "general-even";
      VerifySpec v;
      v.id = "coaction-" + f;
      v.params = pq ? std::vector<std::string>{"p", "q", "r"} : std::vector<std::string>{"a", "b", "r"};
      if (pq) v.defaults = {{"p", {1, 8}}, {"q", {2, 8}}};
      else if (f == "zbar-zbar") v.defaults = {{"a", {1, 3}}, {"b", {1, 3}}};
      else if (f == "odd-odd") v.defaults = {{"a", {0, 3}}, {"b", {1, 3}}};
      else v.defaults = {{"a", {0, 3}}, {"b", {0, 3}}};
      v.summary = "D_{2r+1} of the " + f + " family against its closed form";
      v.exact = true;
      out.push_back(v);
    }
    return out;
  }();
  return specs;
}

const VerifySpec* find_verify_spec(const std::string& id) {
  for (const auto& s : verify_specs())
    if (s.id == id) return &s;
  return nullptr;
}

namespace {

bool is_coaction(const std::string& id) { return id.rfind("coaction-", 0) == 0; }

void product(const std::vector<std::string>& names, const std::vector<std::pair<int, int>>& ranges, std::size_t at,
             std::vector<std::pair<std::string, int>>& cur, std::vector<std::vector<std::pair<std::string, int>>>& out) {
  if (at == names.size()) {
    out.push_back(cur);
    return;
  }
  for (int v = ranges[at].first; v <= ranges[at].second; ++v) {
    cur.emplace_back(names[at], v);
    product(names, ranges, at + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Job> expand_jobs(const std::string& id, const std::map<std::string, std::pair<int, int>>& ranges) {
  const VerifySpec* spec = find_verify_spec(id);
  if (!spec) throw std::invalid_argument("unknown identity: " + id);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rs;
  for (const auto& p : spec->params) {
    if (p == "r" && is_coaction(id)) continue;
    auto it = ranges.find(p);
    const auto r = it != ranges.end() ? it->second : spec->defaults.at(p);
    if (r.first > r.second) throw std::invalid_argument("empty range for " + p);
    names.push_back(p);
    rs.push_back(r);
  }
  std::vector<std::vector<std::pair<std::string, int>>> points;
  std::vector<std::pair<std::string, int>> cur;
  product(names, rs, 0, cur, points);

  std::vector<Job> jobs;
  for (auto& pt : points) {
    if (!is_coaction(id)) {
      jobs.push_back({id, pt});
      continue;
    }
    int rmax = 0;
    try {
      rmax = family_max_r(parse_family(id.substr(9)), pt[0].second, pt[1].second);
    } catch (const std::invalid_argument&) {
      // outside the family; kept so that the run reports it as excluded
      jobs.push_back({id, pt});
      continue;
    }
    int lo = 1, hi = rmax;
    if (auto it = ranges.find("r"); it != ranges.end()) {
      if (it->second.first > it->second.second) throw std::invalid_argument("empty range for r");
      lo = std::max(lo, it->second.first);
      hi = std::min(hi, it->second.second);
    }
    for (int r = lo; r <= hi; ++r) {
      auto p = pt;
      p.emplace_back("r", r);
      jobs.push_back({id, p});
    }
  }
  return jobs;
}

namespace {

struct Prepared {
  RunResult result;
  bool excluded = false;
  bool numeric = false;
  IdentityInstance inst;
};

std::vector<int> values(const Job& j) {
  std::vector<int> v;
  for (const auto& [n, x] : j.params) v.push_back(x);
  return v;
}

void finish_exact(RunResult& r, bool pass) {
  r.exact = true;
  r.status = pass ? RunStatus::Pass : RunStatus::Fail;
  r.delta = pass ? "0" : "nonzero";
  r.err = "0";
  r.tolerance = "0";
}

Prepared prepare(const Job& j) {
  Prepared p;
  p.result.id = j.id;
  p.result.params = j.params;
  const auto v = values(j);
  try {
    if (j.id == "lemma-binomial") {
      std::string lhs, rhs;
      bool ok = true;
      for (int r = 1; 2 * r + 1 <= 2 * v[0] + 2 * v[1] - 3; ++r) {
        const auto [one, two] = lemma_binomial(v[0], v[1], r);
        ok = ok && one.pass() && two.pass();
        const std::string sep = lhs.empty() ? "" : "; ";
        lhs += sep + "r=" + std::to_string(r) + ": " + to_string(one.lhs) + ", " + to_string(two.lhs);
        rhs += sep + "r=" + std::to_string(r) + ": " + to_string(one.rhs) + ", " + to_string(two.rhs);
      }
      if (lhs.empty()) p.result.note = "no valid r";
      p.result.lhs = lhs;
      p.result.rhs = rhs;
      finish_exact(p.result, ok);
    } else if (j.id == "modprod-binomial") {
      std::string lhs, rhs;
      bool ok = true;
      for (const auto& m : mod_products_checks(v[0], v[1])) {
        ok = ok && m.pass();
        const std::string sep = lhs.empty() ? "" : "; ";
        lhs += sep + "r=" + std::to_string(m.r) + ": " + to_string(m.binomial.lhs);
        rhs += sep + "r=" + std::to_string(m.r) + ": " + to_string(m.binomial.rhs);
        if (m.coaction_residual != 0) p.result.note += "r=" + std::to_string(m.r) + " residual " + to_string(m.coaction_residual) + " ";
      }
      p.result.lhs = lhs;
      p.result.rhs = rhs;
      finish_exact(p.result, ok);
    } else if (is_coaction(j.id)) {
      if (v.size() < 3) {
        p.excluded = true;
        return p;
      }
      const auto c = verify_family_Dr(parse_family(j.id.substr(9)), v[0], v[1], v[2]);
      p.result.lhs = c.computed.str();
      p.result.rhs = c.expected.str();
      std::string failed;
      for (const auto& [name, ok] : c.stages)
        if (!ok) failed += (failed.empty() ? "" : ", ") + name;
      p.result.note = failed.empty() ? c.note : "failed stages: " + failed;
      finish_exact(p.result, c.pass);
    } else {
      p.inst = build_identity(j.id, v);
      if (p.inst.exact) {
        p.result.lhs = p.inst.lhs.str();
        p.result.rhs = p.inst.rhs.str();
        finish_exact(p.result, p.inst.lhs == p.inst.rhs);
      } else {
        p.numeric = true;
      }
    }
  } catch (const std::invalid_argument&) {
    p.excluded = true;
  } catch (const std::exception& e) {
    p.result.status = RunStatus::Fail;
    p.result.note = std::string("error: ") + e.what();
  }
  return p;
}

int t_digits(const std::string& tol, int digits) {
  const double t = std::stod(tol);
  const int d = static_cast<int>(std::ceil(-std::log10(t))) + 2;
  return std::clamp(d, 5, digits);
}

void evaluate(Prepared& p, Evaluator& ev, const VerifyOptions& opt, const Real& tol) {
  RunResult& r = p.result;
  r.exact = false;
  r.digits = opt.digits;
  r.tolerance = opt.tolerance;
  try {
    BigReal L;
    if (p.inst.t_lhs.empty()) {
      L = ev.lincomb(p.inst.lhs);
    } else {
      const int td = t_digits(opt.tolerance, opt.digits);
      L = eval_t(p.inst.t_lhs, td);
      r.note = "t series at " + std::to_string(td) + " digits";
    }
    const BigReal R = ev.lincomb(p.inst.rhs);
    const Real delta = (L.value - R.value).abs();
    const Real err = errb::add(L.err, R.err);
    const Real bound = errb::add(errb::add(errb::from_real(delta), errb::ulp_bound(delta)), err);
    r.lhs = L.value.str(25);
    r.rhs = R.value.str(25);
    r.delta = delta.str(4);
    r.err = err.str(4);
    r.status = bound <= tol ? RunStatus::Pass : RunStatus::Fail;
  } catch (const PrecisionError& e) {
    r.status = RunStatus::Skip;
    r.note = e.what();
  } catch (const std::exception& e) {
    r.status = RunStatus::Fail;
    r.note = std::string("error: ") + e.what();
  }
}

Report run_impl(const std::vector<Job>& jobs, const VerifyOptions& opt, bool parallel) {
  using clock = std::chrono::steady_clock;
  const int threads = parallel ? std::max(opt.jobs, 1) : 1;
  const long n = static_cast<long>(jobs.size());
  std::vector<Prepared> prep(jobs.size());
  std::vector<double> secs(jobs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (parallel)
  for (long i = 0; i < n; ++i) {
    const auto t0 = clock::now();
    prep[i] = prepare(jobs[i]);
    secs[i] = std::chrono::duration<double>(clock::now() - t0).count();
  }

  Evaluator ev(opt.digits, opt.cache);
  const Real tol = Real::from_string(opt.tolerance, 128);
  if (parallel) {
    std::vector<SignedIndex> all;
    for (const auto& p : prep)
      if (p.numeric)
        for (const LinComb* c : {&p.inst.lhs, &p.inst.rhs})
          if (p.inst.t_lhs.empty() || c == &p.inst.rhs)
            for (const auto& [m, coef] : c->terms()) all.insert(all.end(), m.begin(), m.end());
    try {
      ev.prefetch(all, threads);
    } catch (const std::exception&) {
      // the failing instance reports its own error below
    }
  }

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (parallel)
  for (long i = 0; i < n; ++i) {
    if (!prep[i].numeric) continue;
    const auto t0 = clock::now();
    evaluate(prep[i], ev, opt, tol);
    secs[i] += std::chrono::duration<double>(clock::now() - t0).count();
  }

  Report rep;
  rep.digits = opt.digits;
  rep.tolerance = opt.tolerance;
  for (std::size_t i = 0; i < prep.size(); ++i) {
    if (prep[i].excluded) {
      ++rep.excluded;
      continue;
    }
    prep[i].result.elapsed = secs[i];
    rep.runs.push_back(std::move(prep[i].result));
  }
  std::sort(rep.runs.begin(), rep.runs.end(), [](const RunResult& a, const RunResult& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  });
  return rep;
}

}  // namespace

Report run_jobs_serial(const std::vector<Job>& jobs, const VerifyOptions& opt) { return run_impl(jobs, opt, false); }
Report run_jobs_parallel(const std::vector<Job>& jobs, const VerifyOptions& opt) { return run_impl(jobs, opt, true); }
Report run_jobs(const std::vector<Job>& jobs, const VerifyOptions& opt) {
  return opt.jobs > 1 ? run_jobs_parallel(jobs, opt) : run_jobs_serial(jobs, opt);
}

std::size_t precompute_constants(ConstCache& cache, int weight_max, int digits, int jobs) {
  if (weight_max < 1 || weight_max > 16) throw std::invalid_argument("constants: weight_max must be in 1..16");
  if (digits < 1 || digits > 1000) throw std::invalid_argument("constants: digits must be in 1..1000");
  std::vector<SignedIndex> xs;
  for (const auto& spec : verify_specs()) {
    if (spec.exact) continue;
    for (const auto& j : expand_jobs(spec.id, {})) {
      IdentityInstance inst;
      try {
        inst = build_identity(j.id, values(j));
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (inst.exact) continue;
      for (const LinComb* c : {&inst.lhs, &inst.rhs})
        for (const auto& [m, coef] : c->terms())
          for (const auto& i : m)
            if (i.weight() <= weight_max) xs.push_back(i);
    }
  }
  for (int k = 2; k <= weight_max; ++k) {
    xs.push_back(SignedIndex({Part{k, 1}}));
    xs.push_back(SignedIndex({Part{k, -1}}));
  }
  xs.push_back(SignedIndex({Part{1, -1}}));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Evaluator ev(digits, &cache);
  ev.prefetch(xs, jobs);
  return xs.size();
}

}  // namespace mzv
