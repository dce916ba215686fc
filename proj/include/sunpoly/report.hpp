#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sunpoly {

/// Parameters outside a check's stated domain.
class OutOfDomain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, finding, error };

std::string_view to_string(Status s);

using Params = std::vector<std::pair<std::string, std::int64_t>>;

/// Outcome of one verification. fail and finding always carry a witness;
/// params reconstruct the invocation. detail holds the exact value the
/// check computed (quotient, sum, ...) and is shown in text output only.
struct CheckReport {
  std::string check_id;
  Params params;
  Status status = Status::pass;
  std::optional<std::string> witness;
  std::string detail;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::pass; }
};

CheckReport make_report(std::string check_id, Params params, bool ok, std::string witness_if_failed,
                        std::string detail = {});

/// Shortens long exact values for display: head, then the full length.
std::string brief(const std::string& text, std::size_t limit = 160);

/// One JSON object, no trailing newline. Keys in schema order.
std::string to_jsonl(const CheckReport& r, bool include_elapsed = true);
std::string to_text_line(const CheckReport& r);

}  // namespace sunpoly
