#include "sunpoly/suite.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/qcore.hpp"
#include "sunpoly/qfamilies.hpp"
#include "sunpoly/recurrence.hpp"

namespace sunpoly {

namespace {

constexpr std::array<std::string_view, 8> kSuites{"theorem1", "theorem2",   "qanalog",     "lemmas",
                                                  "theorem5", "recurrence", "conjectures", "all"};

struct Defaults {
  Range n;
  Range m;
};

Defaults defaults_for(std::string_view suite) {
  if (suite == "theorem1") return {{1, 50}, {1, 50}};
  if (suite == "theorem2") return {{1, 30}, {1, 30}};
  if (suite == "qanalog") return {{1, 12}, {1, 12}};
  if (suite == "lemmas") return {{1, 30}, {0, 30}};
  if (suite == "theorem5") return {{1, 12}, {1, 12}};
  if (suite == "recurrence") return {{1, 200}, {1, 200}};
  return {{1, 100}, {1, 100}};  // conjectures
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("malformed integer '" + std::string(text) + "'");
  return v;
}

class TaskList {
 public:
  TaskList(const SuiteSpec& spec, std::string_view suite) : spec_(spec) {
    const Defaults d = defaults_for(suite);
    n_ = spec.n.value_or(d.n);
    m_ = spec.m.value_or(d.m);
  }

  void need(const Range& r, std::int64_t minimum, const char* name) const {
    if (r.lo < minimum)
      throw UsageError(std::string("--") + name + " must start at " + std::to_string(minimum) + " or above");
  }

  const Range& n() const { return n_; }
  const Range& m() const { return m_; }

  // Sub-range of k within [lo, hi] honoring --k.
  Range k_within(std::int64_t lo, std::int64_t hi) const {
    if (spec_.k) return {std::max(lo, spec_.k->lo), std::min(hi, spec_.k->hi)};
    return {lo, hi};
  }

  template <class F>
  void add(std::string id, Params params, F&& f) {
    tasks_.push_back({std::forward<F>(f), std::move(id), std::move(params)});
  }

  std::vector<Task> take() { return std::move(tasks_); }

 private:
  const SuiteSpec& spec_;
  Range n_;
  Range m_;
  std::vector<Task> tasks_;
};

void theorem1_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  for (auto n = t.n().lo; n <= t.n().hi; ++n) {
    t.add("thm1_first", {{"n", n}}, [n] { return thm1_first_check(n); });
    t.add("thm1_second", {{"n", n}}, [n] { return thm1_second_check(n); });
  }
}

void theorem2_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  t.need(t.m(), 1, "m");
  for (auto m = t.m().lo; m <= t.m().hi; ++m)
    for (auto n = t.n().lo; n <= t.n().hi; ++n)
      t.add("theorem2", {{"m", m}, {"n", n}}, [m, n] { return theorem2_check(m, n); });
}

void qanalog_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  t.need(t.m(), 1, "m");
  for (auto m = t.m().lo; m <= t.m().hi; ++m)
    for (auto n = t.n().lo; n <= t.n().hi; ++n)
      t.add("qanalog", {{"m", m}, {"n", n}}, [m, n] { return thm_q_analog_check(m, n); });
}

CheckReport bool_report(std::string id, Params params, bool ok) {
  return make_report(std::move(id), std::move(params), ok, "identity does not hold");
}

void lemmas_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  t.need(t.m(), 0, "m");
  const Range n = t.n();
  const Range m = t.m();
  for (auto i = n.lo; i <= n.hi; ++i)
    t.add("lemma_one", {{"n", i}}, [i] { return bool_report("lemma_one", {{"n", i}}, lemma_one_check(i)); });
  for (auto i = n.lo; i <= n.hi; ++i) {
    const Range ks = t.k_within(0, i);
    for (auto k = ks.lo; k <= ks.hi; ++k)
      t.add("lemma_two", {{"n", i}, {"k", k}},
            [i, k] { return bool_report("lemma_two", {{"n", i}, {"k", k}}, lemma_two_check(i, k)); });
  }
  for (auto a = m.lo; a <= m.hi; ++a)
    for (auto b = n.lo; b <= n.hi; ++b)
      t.add("lemma_three", {{"m", a}, {"n", b}}, [a, b] { return lemma_three_check(a, b); });
  for (auto a = std::max<std::int64_t>(m.lo, 1); a <= m.hi; ++a)
    for (auto b = n.lo; b <= n.hi; ++b)
      t.add("gessel", {{"m", a}, {"n", b}}, [a, b] { return gessel_check(a, b); });
  for (auto i = n.lo; i <= n.hi; ++i) {
    t.add("identity_sum2_7", {{"n", i}}, [i] { return identity_check(Identity::sum2_7, i); });
    t.add("identity_sum2_11", {{"n", i}}, [i] { return identity_check(Identity::sum2_11, i); });
    t.add("identity_sun_norm", {{"n", i}}, [i] { return identity_check(Identity::sun_norm, i); });
  }
  for (auto p = n.lo; p <= n.hi; ++p)
    if (p >= 3 && is_prime(p))
      t.add("identity_sun_kgk", {{"p", p}}, [p] { return identity_check(Identity::sun_kgk, p); });
  for (auto i = n.lo; i <= n.hi; ++i) {
    const Range ks = t.k_within(0, i - 1);
    for (auto k = ks.lo; k <= ks.hi; ++k)
      t.add("single_sum", {{"n", i}, {"k", k}}, [i, k] { return single_sum_check(i, k); });
  }
  for (auto i = n.lo; i <= n.hi; ++i) {
    const Range js = t.k_within(0, i - 1);
    for (auto j = js.lo; j <= js.hi; ++j)
      t.add("telescope", {{"n", i}, {"j", j}}, [i, j] { return telescope_check(i, j); });
  }
  for (auto i = n.lo; i <= n.hi; ++i)
    t.add("multi_sum_identity", {{"n", i}}, [i] { return multi_sum_identity_check(i); });
}

void theorem5_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  for (auto n = t.n().lo; n <= t.n().hi; ++n) {
    for (auto which : {Thm5Congruence::oddcong, Thm5Congruence::evencong1, Thm5Congruence::evencong2})
      t.add("thm5_" + std::string(to_string(which)), {{"n", n}}, [which, n] { return thm5_check(which, n); });
    t.add("q1_specialization", {{"n", n}}, [n] { return q1_specialization_check(n); });
  }
}

void recurrence_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  for (auto n = t.n().lo; n <= t.n().hi; ++n) {
    t.add("s_rec", {{"n", n}}, [n] { return s_rec_check(n); });
    for (auto kind : {SModKind::rec10, SModKind::rec11, SModKind::rec1})
      t.add("s_mod_" + std::string(to_string(kind)), {{"n", n}}, [kind, n] { return s_mod_check(kind, n); });
    t.add("rewrite_identity", {{"n", n}}, [n] { return rewrite_identity_check(n); });
    t.add("multisum3", {{"n", n}}, [n] { return multisum3_check(n); });
  }
}

void conjectures_tasks(TaskList& t) {
  t.need(t.n(), 1, "n");
  for (auto n = t.n().lo; n <= t.n().hi; ++n) {
    t.add("remark_mod2n2", {{"n", n}}, [n] { return remark_conjecture_check(RemarkKind::mod2n2, n); });
    if (is_prime(n))
      t.add("remark_prime_mod_p3", {{"p", n}},
            [n] { return remark_conjecture_check(RemarkKind::prime_mod_p3, n); });
    t.add("conj61", {{"n", n}}, [n] { return conj61_check(n); });
    if (n >= 3 && is_prime(n)) t.add("conj61_prime", {{"p", n}}, [n] { return conj61_prime_check(n); });
  }
}

void append_suite(std::string_view suite, const SuiteSpec& spec, std::vector<Task>& out) {
  TaskList t(spec, suite);
  if (suite == "theorem1")
    theorem1_tasks(t);
  else if (suite == "theorem2")
    theorem2_tasks(t);
  else if (suite == "qanalog")
    qanalog_tasks(t);
  else if (suite == "lemmas")
    lemmas_tasks(t);
  else if (suite == "theorem5")
    theorem5_tasks(t);
  else if (suite == "recurrence")
    recurrence_tasks(t);
  else if (suite == "conjectures")
    conjectures_tasks(t);
  else
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  auto tasks = t.take();
  out.insert(out.end(), std::make_move_iterator(tasks.begin()), std::make_move_iterator(tasks.end()));
}

CheckReport run_one(const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = task.run();
  } catch (const std::exception& e) {
    r.check_id = task.check_id;
    r.params = task.params;
    r.status = Status::error;
    r.witness = e.what();
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

}  // namespace

Range parse_range(std::string_view text) {
  Range r;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  } else {
    r.lo = r.hi = parse_int(text);
  }
  if (r.hi < r.lo) throw UsageError("empty range '" + std::string(text) + "'");
  return r;
}

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<Task> build_tasks(const SuiteSpec& spec) {
  if (spec.jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<Task> tasks;
  if (spec.suite == "all") {
    for (auto name : kSuites)
      if (name != "all") append_suite(name, spec, tasks);
  } else {
    append_suite(spec.suite, spec, tasks);
  }
  return tasks;
}

std::vector<CheckReport> run_tasks(std::span<const Task> tasks, unsigned jobs,
                                   const std::function<void(const CheckReport&)>& sink) {
  std::vector<CheckReport> reports(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      reports[i] = run_one(tasks[i]);
      if (sink) sink(reports[i]);
    }
    return reports;
  }

  std::vector<char> ready(tasks.size(), 0);
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> workers;
    const unsigned count = std::min<std::size_t>(jobs, tasks.size());
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
          CheckReport r = run_one(tasks[i]);
          {
            std::lock_guard lock(mutex);
            reports[i] = std::move(r);
            ready[i] = 1;
          }
          cv.notify_all();
        }
      });
    }
    // Ordered merge: emit report i once it and all before it are done.
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return ready[i] != 0; });
      lock.unlock();
      if (sink) sink(reports[i]);
    }
  }
  return reports;
}

int exit_code(std::span<const CheckReport> reports) {
  bool finding = false;
  for (const auto& r : reports) {
    if (r.status == Status::fail || r.status == Status::error) return kExitFail;
    if (r.status == Status::finding) finding = true;
  }
  return finding ? kExitFinding : kExitPass;
}

int run_suite(const SuiteSpec& spec, std::ostream& out) {
  const std::vector<Task> tasks = build_tasks(spec);
  std::array<std::size_t, 4> counts{};
  const auto reports = run_tasks(tasks, spec.jobs, [&](const CheckReport& r) {
    ++counts[static_cast<std::size_t>(r.status)];
    if (spec.format == OutputFormat::jsonl)
      out << to_jsonl(r) << '\n';
    else
      out << to_text_line(r) << '\n';
  });
  if (spec.format == OutputFormat::text)
    out << "summary: " << reports.size() << " checks, " << counts[0] << " pass, " << counts[1] << " fail, "
        << counts[2] << " finding, " << counts[3] << " error\n";
  out.flush();
  return exit_code(reports);
}

}  // namespace sunpoly
