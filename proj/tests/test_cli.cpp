#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "json.hpp"
#include "sunpoly/cli.hpp"
#include "sunpoly/suite.hpp"

using namespace sunpoly;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string strip_elapsed(const std::string& jsonl) {
  static const std::regex elapsed(R"(,"elapsed_ms":\d+)");
  return std::regex_replace(jsonl, elapsed, "");
}

Task fixed(Status status, std::string witness = "w") {
  return {[status, witness] {
            CheckReport r;
            r.check_id = "synthetic";
            r.status = status;
            if (status != Status::pass) r.witness = witness;
            return r;
          },
          "synthetic",
          {}};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("range parsing") {
    const Range r = parse_range("3..17");
    CHECK(r.lo == 3);
    CHECK(r.hi == 17);
    CHECK(parse_range("5").lo == 5);
    CHECK(parse_range("5").hi == 5);
    CHECK(parse_range("-2..-1").lo == -2);
    CHECK_THROWS_AS(parse_range("1..0"), UsageError);
    CHECK_THROWS_AS(parse_range("a..3"), UsageError);
    CHECK_THROWS_AS(parse_range("1..."), UsageError);
    CHECK_THROWS_AS(parse_range(""), UsageError);
  }

  TEST_CASE("compute examples") {
    auto r = run({"compute", "g", "2"});
    CHECK(r.code == kExitPass);
    CHECK(r.out == "1 + 8*x + 6*x^2\n");
    r = run({"compute", "qbinom", "4", "2"});
    CHECK(r.out == "1 + q + 2*q^2 + q^3 + q^4\n");
    r = run({"compute", "S", "4"});
    CHECK(r.out == "-2\n");
    CHECK(run({"compute", "g", "2", "-1"}).out == "-1\n");
    CHECK(run({"compute", "f", "1"}).out == "2*x\n");
    CHECK(run({"compute", "phi", "6"}).out == "1 - q + q^2\n");
    CHECK(run({"compute", "T", "3"}).out == "6\n");
    CHECK(run({"compute", "qanalog", "1", "2"}).out == "1 + q + q^2 + q^3\n");
    CHECK(run({"compute", "ledger", "2", "3"}).out == "Phi_2 * Phi_3^2 * Phi_4 * Phi_6\n");
    CHECK(run({"compute", "gq", "1"}).out == "(1 + x) + (x)*q\n");
  }

  TEST_CASE("compute usage errors") {
    CHECK(run({"compute", "phi", "0"}).code == kExitUsage);
    CHECK(run({"compute", "S", "-1"}).code == kExitUsage);
    CHECK(run({"compute", "nope", "1"}).code == kExitUsage);
    CHECK(run({"compute", "qbinom", "4"}).code == kExitUsage);
    CHECK(run({"compute", "S", "x"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
  }

  TEST_CASE("verify usage errors") {
    auto r = run({"verify", "--suite", "conjectures", "--n", "1..0"});
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.find("Usage") != std::string::npos);
    CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "theorem1", "--n", "1..x"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "theorem1", "--jobs", "0"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "theorem1", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"verify", "--suite", "theorem1", "--n", "0..3"}).code == kExitUsage);
    CHECK(run({"verify"}).code == kExitUsage);
  }

  TEST_CASE("theorem2 suite on a 10 x 10 grid") {
    const auto r = run({"verify", "--suite", "theorem2", "--m", "1..10", "--n", "1..10", "--format", "jsonl"});
    CHECK(r.code == kExitPass);
    const auto reports = lines(r.out);
    REQUIRE(reports.size() == 100);
    for (const auto& line : reports) CHECK(nlohmann::json::parse(line)["status"] == "pass");
  }

  TEST_CASE("theorem1 suite as jsonl") {
    const auto r = run({"verify", "--suite", "theorem1", "--n", "1..50", "--format", "jsonl"});
    CHECK(r.code == kExitPass);
    const auto reports = lines(r.out);
    REQUIRE(reports.size() == 100);
    for (const auto& line : reports) {
      const auto j = nlohmann::json::parse(line);
      REQUIRE(j.size() == 5);
      CHECK(j["check"].is_string());
      CHECK(j["params"].is_object());
      for (const auto& [key, value] : j["params"].items()) CHECK(value.is_number_integer());
      CHECK(j["status"] == "pass");
      CHECK(j["witness"].is_null());
      CHECK(j["elapsed_ms"].is_number_integer());
    }
    const auto first = nlohmann::json::parse(reports.front());
    CHECK(first["check"] == "thm1_first");
    CHECK(first["params"]["n"] == 1);
  }

  TEST_CASE("text output ends with a summary") {
    const auto r = run({"verify", "--suite", "theorem1", "--n", "1..3"});
    CHECK(r.code == kExitPass);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 7);
    CHECK(out.back() == "summary: 6 checks, 6 pass, 0 fail, 0 finding, 0 error");
  }

  TEST_CASE("determinism across runs and job counts") {
    const std::vector<std::string> base{"verify", "--suite", "all", "--n", "1..12", "--m", "1..8", "--format", "jsonl"};
    auto with_jobs = [&](const char* jobs) {
      auto args = base;
      args.push_back("--jobs");
      args.push_back(jobs);
      return run(args);
    };
    const auto a = with_jobs("1");
    const auto b = with_jobs("1");
    const auto c = with_jobs("8");
    CHECK(a.code == kExitPass);
    CHECK(c.code == kExitPass);
    CHECK(!a.out.empty());
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
    CHECK(strip_elapsed(a.out) == strip_elapsed(c.out));
  }

  TEST_CASE("exit code contract") {
    CHECK(exit_code(run_tasks(std::vector<Task>{fixed(Status::pass)}, 1)) == kExitPass);
    CHECK(exit_code(run_tasks(std::vector<Task>{fixed(Status::pass), fixed(Status::finding)}, 2)) ==
          kExitFinding);
    CHECK(exit_code(run_tasks(std::vector<Task>{fixed(Status::finding), fixed(Status::fail)}, 2)) == kExitFail);
    CHECK(exit_code(std::vector<CheckReport>{}) == kExitPass);
    CHECK(run({"verify", "--suite", "x"}).code == kExitUsage);
  }

  TEST_CASE("exceptions become error reports") {
    std::vector<Task> tasks{fixed(Status::pass),
                            {[]() -> CheckReport { throw std::runtime_error("boom"); }, "thrower", {{"n", 4}}}};
    const auto reports = run_tasks(tasks, 4);
    REQUIRE(reports.size() == 2);
    CHECK(reports[1].status == Status::error);
    CHECK(reports[1].check_id == "thrower");
    CHECK(reports[1].params == Params{{"n", 4}});
    CHECK(reports[1].witness == "boom");
    CHECK(exit_code(reports) == kExitFail);
  }

  TEST_CASE("ordered emission under parallelism") {
    std::vector<Task> tasks;
    for (int i = 0; i < 64; ++i)
      tasks.push_back({[i] {
                         CheckReport r;
                         r.check_id = "t" + std::to_string(i);
                         return r;
                       },
                       "t" + std::to_string(i),
                       {}});
    std::vector<std::string> seen;
    run_tasks(tasks, 8, [&](const CheckReport& r) { seen.push_back(r.check_id); });
    REQUIRE(seen.size() == 64);
    for (int i = 0; i < 64; ++i) CHECK(seen[static_cast<std::size_t>(i)] == "t" + std::to_string(i));
  }

  TEST_CASE("fail and finding reports carry a witness") {
    CheckReport r = make_report("x", {}, false, "witness text");
    CHECK(r.status == Status::fail);
    CHECK(r.witness == "witness text");
    const auto j = nlohmann::json::parse(to_jsonl(r));
    CHECK(j["status"] == "fail");
    CHECK(j["witness"] == "witness text");
    CHECK(to_jsonl(r, false).find("elapsed_ms") == std::string::npos);
  }

  TEST_CASE("output file") {
    const std::string path = "cli_test_output.jsonl";
    const auto r = run({"verify", "--suite", "theorem1", "--n", "1..2", "--format", "jsonl", "--out", path});
    CHECK(r.code == kExitPass);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(lines(content.str()).size() == 4);
    std::remove(path.c_str());
  }
}
