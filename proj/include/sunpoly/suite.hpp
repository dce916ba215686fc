#pragma once

// Named verification suites over parameter grids, run on a worker pool with
// results emitted in task order.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sunpoly/report.hpp"

namespace sunpoly {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusive integer range.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// "A..B" or "A"; throws UsageError when malformed or empty (B < A).
Range parse_range(std::string_view text);

enum class OutputFormat { text, jsonl };

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFinding = 3;

struct SuiteSpec {
  std::string suite;  // theorem1 theorem2 qanalog lemmas theorem5 recurrence conjectures all
  std::optional<Range> n;
  std::optional<Range> m;
  std::optional<Range> k;
  unsigned jobs = 1;
  OutputFormat format = OutputFormat::text;
};

std::span<const std::string_view> suite_names();

struct Task {
  std::function<CheckReport()> run;
  std::string check_id;
  Params params;
};

/// The suite's tasks in emission order. Throws UsageError for an unknown
/// suite, a range below the suite's domain, or jobs < 1.
std::vector<Task> build_tasks(const SuiteSpec& spec);

/// Runs every task on `jobs` workers. Exceptions become error reports.
/// sink, when set, sees reports in task order as soon as each is ready.
std::vector<CheckReport> run_tasks(std::span<const Task> tasks, unsigned jobs,
                                   const std::function<void(const CheckReport&)>& sink = {});

/// 1 if any fail or error, else 3 if any finding, else 0.
int exit_code(std::span<const CheckReport> reports);

/// Builds, runs and streams a suite; returns the exit code.
int run_suite(const SuiteSpec& spec, std::ostream& out);

}  // namespace sunpoly
