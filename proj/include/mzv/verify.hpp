#pragma once

#include "mzv/numeval.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

enum class RunStatus { Pass, Fail, Skip };
std::string status_name(RunStatus s);

/// One verified instance. Values are decimal strings; exact runs carry the
/// normal forms of both sides instead.
struct RunResult {
  std::string id;
  std::vector<std::pair<std::string, int>> params;
  RunStatus status = RunStatus::Skip;
  bool exact = false;
  int digits = 0;  // working precision of a numeric run
  std::string lhs, rhs, delta, err, tolerance;
  std::string note;
  double elapsed = 0;  // seconds
};

struct Report {
  int digits = 0;
  std::string tolerance;
  std::vector<RunResult> runs;  // sorted by (id, params)
  int excluded = 0;             // range points outside an identity's preconditions

  int count(RunStatus s) const;
  bool all_pass() const { return count(RunStatus::Fail) == 0 && count(RunStatus::Skip) == 0; }
  /// Deterministic JSON; elapsed times only when `timing`.
  std::string to_json(bool timing) const;
  /// One line per run.
  std::string to_text(bool timing) const;
};

struct VerifyOptions {
  int digits = 50;
  std::string tolerance = "1e-8";
  int jobs = 1;
  ConstCache* cache = nullptr;
};

/// Every id accepted by `verify`: the identity registry, lemma-binomial,
/// modprod-binomial and one coaction-<family> per coaction family.
struct VerifySpec {
  std::string id;
  std::vector<std::string> params;
  std::map<std::string, std::pair<int, int>> defaults;
  std::string summary;
  bool exact = false;
};
const std::vector<VerifySpec>& verify_specs();
const VerifySpec* find_verify_spec(const std::string& id);

struct Job {
  std::string id;
  std::vector<std::pair<std::string, int>> params;
};

/// Cartesian product of the ranges (defaults where not overridden). Range
/// names the id does not use are ignored. Coaction ids expand r over the
/// valid range of each (a, b), intersected with an explicit r range.
/// Throws std::invalid_argument on an unknown id or an empty range.
std::vector<Job> expand_jobs(const std::string& id, const std::map<std::string, std::pair<int, int>>& ranges);

/// Runs every job; instances whose construction rejects the parameters are
/// counted as excluded. The serial path is the reference implementation.
Report run_jobs_serial(const std::vector<Job>& jobs, const VerifyOptions& opt);
/// OpenMP over instances after a shared parallel prefetch of all constants;
/// yields the same runs as the serial path.
Report run_jobs_parallel(const std::vector<Job>& jobs, const VerifyOptions& opt);
Report run_jobs(const std::vector<Job>& jobs, const VerifyOptions& opt);

/// Parses "lo..hi" or a single integer.
std::pair<int, int> parse_range(const std::string& s);

/// Precomputes every constant used by the default instances of weight
/// <= weight_max into the cache; returns the number of constants stored.
/// Throws std::invalid_argument beyond weight 16 or 1000 digits.
std::size_t precompute_constants(ConstCache& cache, int weight_max, int digits, int jobs);

}  // namespace mzv
