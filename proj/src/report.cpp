#include "sunpoly/report.hpp"

#include "json.hpp"
#include <sstream>

namespace sunpoly {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::finding:
      return "finding";
    case Status::error:
      return "error";
  }
  return "error";
}

CheckReport make_report(std::string check_id, Params params, bool ok, std::string witness_if_failed,
                        std::string detail) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.status = ok ? Status::pass : Status::fail;
  if (!ok) r.witness = std::move(witness_if_failed);
  r.detail = std::move(detail);
  return r;
}

std::string brief(const std::string& text, std::size_t limit) {
  if (text.size() <= limit) return text;
  return text.substr(0, limit / 2) + " ... (" + std::to_string(text.size()) + " chars)";
}

std::string to_jsonl(const CheckReport& r, bool include_elapsed) {
  nlohmann::ordered_json j;
  j["check"] = r.check_id;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : r.params) params[name] = value;
  j["params"] = std::move(params);
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  if (include_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string to_text_line(const CheckReport& r) {
  std::ostringstream out;
  out << to_string(r.status) << ' ' << r.check_id;
  for (const auto& [name, value] : r.params) out << ' ' << name << '=' << value;
  if (r.witness) out << " witness: " << *r.witness;
  if (!r.detail.empty()) out << " [" << r.detail << ']';
  return out.str();
}

}  // namespace sunpoly
