#include "sunpoly/qcore.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "sunpoly/comb.hpp"
#include "sunpoly/memo.hpp"
#include "sunpoly/poly_format.hpp"

namespace sunpoly {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw OutOfDomain(what);
}

// 1 - q^e
IntPoly one_minus_power(std::int64_t e) {
  return IntPoly::constant(1) - IntPoly::monomial(1, static_cast<std::size_t>(e));
}

// Pascal-type table, grown a row at a time on demand.
class QBinomialTable {
 public:
  IntPoly get(std::int64_t n, std::int64_t k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) grow();
    return rows_[n][k];
  }

 private:
  void grow() {
    const std::size_t n = rows_.size();
    std::vector<IntPoly> row(n + 1);
    row[0] = IntPoly::constant(1);
    row[n] = IntPoly::constant(1);
    for (std::size_t k = 1; k < n; ++k) {
      row[k] = rows_[n - 1][k - 1];
      row[k].add_scaled(rows_[n - 1][k], 1, k);
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<IntPoly>> rows_;
};

QBinomialTable& qbinomial_table() {
  static QBinomialTable table;
  return table;
}

IntPoly product_of(std::vector<IntPoly> factors) {
  if (factors.empty()) return IntPoly::constant(1);
  while (factors.size() > 1) {
    std::vector<IntPoly> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) next.push_back(factors[i] * factors[i + 1]);
    if (factors.size() % 2 == 1) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

bool nonnegative_coefficients(const IntPoly& p) {
  for (const auto& c : p.coeffs())
    if (sgn(c) < 0) return false;
  return true;
}

}  // namespace

IntPoly q_int(std::int64_t n) {
  require(n >= 0, "q_int: negative n");
  return IntPoly(std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
}

IntPoly q_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return IntPoly();
  if (n < kQBinomialTableRows) return qbinomial_table().get(n, k);
  return q_binom_product(n, k);
}

IntPoly q_binom_product(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return IntPoly();
  k = std::min(k, n - k);
  IntPoly p = IntPoly::constant(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    p -= p.shifted(static_cast<std::size_t>(n - k + i));
    p = exact_quotient(p, one_minus_power(i));
  }
  return p;
}

const IntPoly& cyclotomic(std::int64_t d) {
  require(d >= 1, "cyclotomic: need d >= 1");
  static ConcurrentMemo<std::int64_t, IntPoly> memo;
  return memo.get(d, [d] {
    IntPoly p = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly::constant(1);
    for (std::int64_t e = 1; e < d; ++e)
      if (d % e == 0) p = exact_quotient(p, cyclotomic(e));
    return p;
  });
}

ShapeFlags shape_check(const IntPoly& p) {
  ShapeFlags flags;
  const auto a = p.coeffs();
  if (a.empty()) return {true, true, true};
  const std::size_t d = a.size() - 1;

  flags.reciprocal = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != a[d - i]) flags.reciprocal = false;

  flags.nonnegative = nonnegative_coefficients(p);

  // 0 <= a_0 <= ... <= a_r >= ... >= a_d >= 0
  std::size_t i = 0;
  while (i < d && a[i] <= a[i + 1]) ++i;
  while (i < d && a[i] >= a[i + 1]) ++i;
  flags.unimodal = i == d && sgn(a[0]) >= 0 && sgn(a[d]) >= 0;
  return flags;
}

bool lemma_product_check(const IntPoly& a, const IntPoly& b) {
  require(shape_check(a).all() && shape_check(b).all(),
          "lemma_product_check: factors must be reciprocal, unimodal and non-negative");
  const ShapeFlags f = shape_check(a * b);
  return f.reciprocal && f.unimodal;
}

CheckReport rsw_check(const IntPoly& p, std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1 && m <= n, "rsw_check: need 1 <= m <= n");
  require(shape_check(p).all(), "rsw_check: p must be reciprocal, unimodal and non-negative");
  const IntPoly quotient = exact_quotient(one_minus_power(m) * p, one_minus_power(n));
  return make_report("rsw", {{"m", m}, {"n", n}}, nonnegative_coefficients(quotient),
                     "quotient " + brief(to_text(quotient, "q")) + " has a negative coefficient",
                     "quotient " + brief(to_text(quotient, "q")));
}

bool PhiExponentLedger::all_nonnegative() const {
  for (const auto& [d, e] : exponents)
    if (e < 0) return false;
  return true;
}

IntPoly PhiExponentLedger::product() const {
  require(all_nonnegative(), "PhiExponentLedger::product: negative exponent");
  std::vector<IntPoly> factors;
  for (const auto& [d, e] : exponents)
    for (std::int64_t i = 0; i < e; ++i) factors.push_back(cyclotomic(d));
  return product_of(std::move(factors));
}

PhiExponentLedger phi_exponent_ledger(std::int64_t m, std::int64_t n) {
  require(m >= 1 && m <= n, "phi_exponent_ledger: need 1 <= m <= n");
  PhiExponentLedger ledger{m, n, {}};
  for (std::int64_t d = 2; d <= 2 * n; ++d) {
    const std::int64_t e = -static_cast<std::int64_t>((m + n) % d == 0) + (m + n - 2) / d + (2 * n) / d -
                           (m - 1) / d - (n - 1) / d - m / d - n / d - (n - m) / d;
    ledger.exponents.emplace(d, e);
  }
  return ledger;
}

IntPoly q_analog_quotient(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "q_analog_quotient: need m, n >= 1");
  const IntPoly middle = q_binom(n, m);
  if (middle.is_zero()) return IntPoly();
  IntPoly numerator = q_binom(m + n - 2, m - 1) * middle;
  numerator = numerator * q_binom(2 * n, n);
  numerator -= numerator.shifted(1);
  return exact_quotient(numerator, one_minus_power(m + n));
}

CheckReport thm_q_analog_check(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "thm_q_analog_check: need m, n >= 1");
  Params params{{"m", m}, {"n", n}};
  IntPoly quotient;
  try {
    quotient = q_analog_quotient(m, n);
  } catch (const InexactDivision&) {
    return make_report("qanalog", std::move(params), false, "1 - q^(m+n) does not divide the numerator");
  }
  if (!nonnegative_coefficients(quotient))
    return make_report("qanalog", std::move(params), false,
                       "negative coefficient in " + brief(to_text(quotient, "q")));
  if (m <= n) {
    const PhiExponentLedger ledger = phi_exponent_ledger(m, n);
    for (const auto& [d, e] : ledger.exponents)
      if (e < 0)
        return make_report("qanalog", std::move(params), false,
                           "ledger exponent e_" + std::to_string(d) + " = " + std::to_string(e));
    if (!(ledger.product() == quotient))
      return make_report("qanalog", std::move(params), false, "ledger product differs from the quotient");
  }
  return make_report("qanalog", std::move(params), true, {}, "quotient " + brief(to_text(quotient, "q")));
}

IntPoly mod_phi_reduce(const IntPoly& p, std::int64_t d) {
  return divrem(p, cyclotomic(d)).remainder;
}

CheckReport q_lucas_check(std::int64_t n, std::int64_t k, std::int64_t d) {
  require(n >= 0 && k >= 0 && d >= 2, "q_lucas_check: need n, k >= 0 and d >= 2");
  const IntPoly lhs = mod_phi_reduce(q_binom(n, k), d);
  IntPoly rhs = mod_phi_reduce(q_binom(n % d, k % d), d);
  rhs.scale(binom(n / d, k / d));
  return make_report("q_lucas", {{"n", n}, {"k", k}, {"d", d}}, lhs == rhs,
                     "lhs " + to_text(lhs, "q") + " != rhs " + to_text(rhs, "q"),
                     "residue " + brief(to_text(lhs, "q")));
}

bool q_chu_check(std::int64_t m, std::int64_t n, std::int64_t k) {
  require(m >= 0 && n >= 0 && k >= 0, "q_chu_check: need m, n, k >= 0");
  IntPoly rhs;
  for (std::int64_t j = 0; j <= k; ++j) {
    if (j > m || k - j > n) continue;
    const auto shift = static_cast<std::size_t>((m - j) * (k - j));
    rhs += (q_binom(m, j) * q_binom(n, k - j)).shifted(shift);
  }
  return q_binom(m + n, k) == rhs;
}

CheckReport inverse_power_congruence_check(std::int64_t d, std::int64_t k) {
  require(d >= 2 && k >= 0 && k <= d - 1, "inverse_power_congruence_check: need d >= 2, 0 <= k <= d-1");
  IntPoly lhs = q_binom(d - 1, k).inflated(2).shifted(static_cast<std::size_t>(k * (k + 1)));
  lhs -= IntPoly::constant(k % 2 == 0 ? 1 : -1);
  const IntPoly residue = mod_phi_reduce(lhs, d);
  CheckReport r = make_report("inverse_power", {{"d", d}, {"k", k}}, residue.is_zero(),
                              "difference = " + to_text(residue, "q") + " mod Phi_d");
  if (!r.passed() && d % 2 == 0) r.status = Status::finding;
  return r;
}

}  // namespace sunpoly
