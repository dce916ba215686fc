#include "sunpoly/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/poly_format.hpp"
#include "sunpoly/qcore.hpp"
#include "sunpoly/qfamilies.hpp"
#include "sunpoly/recurrence.hpp"
#include "sunpoly/suite.hpp"

namespace sunpoly {

namespace {

constexpr const char* kComputeHelp =
    "entities:\n"
    "  g|f|A n [x]     Sun, Franel or Apery polynomial (or its value at x)\n"
    "  S n             S_n\n"
    "  T n             T_n\n"
    "  binom n k       binomial coefficient\n"
    "  qint n          [n]_q\n"
    "  qbinom n k      Gaussian binomial [n,k]_q\n"
    "  phi d           cyclotomic polynomial (alias: cyclotomic)\n"
    "  qanalog m n     quotient polynomial of the q-analogue\n"
    "  ledger m n      cyclotomic exponents of that quotient (1 <= m <= n)\n"
    "  gq n            g_n(x;q)\n";

std::int64_t to_int(const std::string& text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("malformed integer '" + text + "'");
  return v;
}

Integer to_integer(const std::string& text) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw UsageError("malformed integer '" + text + "'");
  return v;
}

std::string compute(const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("compute: missing entity");
  const std::string& entity = words.front();
  const std::vector<std::string> args(words.begin() + 1, words.end());
  auto expect = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw UsageError("compute " + entity + ": wrong number of arguments");
  };
  auto arg = [&](std::size_t i) { return to_int(args.at(i)); };

  static const std::map<std::string, Family> families{
      {"g", Family::sun}, {"f", Family::franel}, {"A", Family::apery}};
  if (auto it = families.find(entity); it != families.end()) {
    expect(1, 2);
    if (args.size() == 2) return to_text(family_value(it->second, arg(0), to_integer(args[1])));
    return to_text(family_poly(it->second, arg(0)));
  }
  if (entity == "S") {
    expect(1, 1);
    return to_text(s_value(arg(0)));
  }
  if (entity == "T") {
    expect(1, 1);
    return to_text(conjecture_t(arg(0)));
  }
  if (entity == "binom") {
    expect(2, 2);
    return to_text(binom(arg(0), arg(1)));
  }
  if (entity == "qint") {
    expect(1, 1);
    return to_text(q_int(arg(0)), "q");
  }
  if (entity == "qbinom") {
    expect(2, 2);
    return to_text(q_binom(arg(0), arg(1)), "q");
  }
  if (entity == "phi" || entity == "cyclotomic") {
    expect(1, 1);
    return to_text(cyclotomic(arg(0)), "q");
  }
  if (entity == "qanalog") {
    expect(2, 2);
    return to_text(q_analog_quotient(arg(0), arg(1)), "q");
  }
  if (entity == "ledger") {
    expect(2, 2);
    const PhiExponentLedger ledger = phi_exponent_ledger(arg(0), arg(1));
    std::string text;
    for (const auto& [d, e] : ledger.exponents) {
      if (e == 0) continue;
      if (!text.empty()) text += " * ";
      text += "Phi_" + std::to_string(d);
      if (e != 1) text += "^" + std::to_string(e);
    }
    return text.empty() ? "1" : text;
  }
  if (entity == "gq") {
    expect(1, 1);
    return to_text(g_q(arg(0), false));
  }
  throw UsageError("compute: unknown entity '" + entity + "'");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of Sun polynomial congruences and identities", "sunpoly"};
  app.require_subcommand(1);

  std::string suite;
  std::string n_text;
  std::string m_text;
  std::string k_text;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out_path;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suites;
  for (auto name : suite_names()) suites += (suites.empty() ? "" : ", ") + std::string(name);
  verify->add_option("--suite", suite, "one of: " + suites)->required();
  verify->add_option("--n", n_text, "range A..B for n (or p)");
  verify->add_option("--m", m_text, "range A..B for m");
  verify->add_option("--k", k_text, "range A..B for k (or j)");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  verify->add_option("--out", out_path, "write reports to FILE");

  std::vector<std::string> words;
  auto* compute_cmd = app.add_subcommand("compute", "Print an exact value");
  compute_cmd->footer(kComputeHelp);
  compute_cmd->add_option("words", words, "entity and its arguments")->required();

  // CLI11 parses in reverse order when given a vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compute_cmd) {
      out << compute(words) << '\n';
      return kExitPass;
    }
    SuiteSpec spec;
    spec.suite = suite;
    if (!n_text.empty()) spec.n = parse_range(n_text);
    if (!m_text.empty()) spec.m = parse_range(m_text);
    if (!k_text.empty()) spec.k = parse_range(k_text);
    spec.jobs = jobs;
    spec.format = format == "jsonl" ? OutputFormat::jsonl : OutputFormat::text;
    // Validate before opening the output file.
    build_tasks(spec);
    if (out_path.empty()) return run_suite(spec, out);
    std::ofstream file(out_path);
    if (!file) {
      err << "cannot open " << out_path << '\n';
      return kExitUsage;
    }
    return run_suite(spec, file);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    if (!*compute_cmd) err << verify->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace sunpoly
