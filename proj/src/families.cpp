#include "sunpoly/families.hpp"

#include <mutex>
#include <string>

#include "sunpoly/comb.hpp"
#include "sunpoly/memo.hpp"
#include "sunpoly/poly_format.hpp"

namespace sunpoly {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw OutOfDomain(what);
}

std::string residue(const Integer& value, const Integer& modulus) {
  return mod_floor(value, modulus).get_str() + " mod " + modulus.get_str();
}

// First coefficient of p not divisible by n, rendered for a witness.
std::string coefficient_witness(const IntPoly& p, const Integer& n, const char* var) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!divides(n, p.coeff(i)))
      return std::string("coefficient of ") + var + "^" + std::to_string(i) + " is " +
             p.coeff(i).get_str() + " = " + residue(p.coeff(i), n);
  return {};
}

Integer sign(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// S_n for n >= 3 by walking the nonzero terms of the defining sum with the
// exact term ratio 2(2k+1)(m-k)^2 / ((k+1)(2k-m+1)(2k-m+2)), m = n-3.
Integer s_defining_sum(std::int64_t n) {
  if (n < 3) return 0;
  const std::int64_t m = n - 3;
  const std::int64_t first = (m + 1) / 2;  // C(k, m-k) = 0 for k < m/2
  Integer term = binom(2 * first, first) * binom(m, first) * binom(first, m - first);
  Integer sum = 0;
  for (std::int64_t k = first; k <= m; ++k) {
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    if (k == m) break;
    const auto num = static_cast<unsigned long>(2 * (2 * k + 1) * (m - k) * (m - k));
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), num);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(k + 1));
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(),
                    static_cast<unsigned long>((2 * k - m + 1) * (2 * k - m + 2)));
  }
  return sum;
}

IntPoly weighted_sun_sum(std::int64_t n, const auto& weight) {
  IntPoly total;
  for (std::int64_t k = 0; k < n; ++k) total.add_scaled(sun_poly(k), Integer(weight(k)));
  return total;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::sun:
      return "sun";
    case Family::franel:
      return "franel";
    case Family::apery:
      return "apery";
  }
  return "?";
}

IntPoly family_poly(Family id, std::int64_t n) {
  require(n >= 0, "family_poly: negative n");
  const std::vector<Integer> row = binomial_row(n);
  std::vector<Integer> coeffs(row.size());
  for (std::int64_t k = 0; k <= n; ++k) {
    const Integer& c = row[static_cast<std::size_t>(k)];
    Integer& out = coeffs[static_cast<std::size_t>(k)];
    switch (id) {
      case Family::sun:
        out = c * c * binom(2 * k, k);
        break;
      case Family::franel:
        out = c * c * binom(2 * k, n);
        break;
      case Family::apery: {
        const Integer d = binom(n + k, k);
        out = c * c * d * d;
        break;
      }
    }
  }
  return IntPoly(std::move(coeffs));
}

Integer family_value(Family id, std::int64_t n, const Integer& x) {
  return evaluate(family_poly(id, n), x);
}

const IntPoly& sun_poly(std::int64_t n) {
  static ConcurrentMemo<std::int64_t, IntPoly> memo;
  return memo.get(n, [n] { return family_poly(Family::sun, n); });
}

Integer SSequence::at(std::int64_t n) {
  require(n >= 0, "S_n: negative n");
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return values_[static_cast<std::size_t>(n)];
}

void SSequence::extend_to(std::int64_t n) {
  std::unique_lock lock(mutex_);
  while (static_cast<std::int64_t>(values_.size()) <= n)
    values_.push_back(s_defining_sum(static_cast<std::int64_t>(values_.size())));
}

SSequence& s_sequence() {
  static SSequence seq;
  return seq;
}

Integer s_value(std::int64_t n) { return s_sequence().at(n); }

const Integer& sun_at_minus_one(std::int64_t k) {
  static ConcurrentMemo<std::int64_t, Integer> memo;
  return memo.get(k, [k] { return family_value(Family::sun, k, -1); });
}

Integer second_sum(std::int64_t n) {
  Integer total = 0;
  for (std::int64_t k = 0; k < n; ++k) total += Integer(8 * k * k + 12 * k + 5) * sun_at_minus_one(k);
  return total;
}

CheckReport thm1_first_check(std::int64_t n) {
  require(n >= 1, "thm1_first_check: need n >= 1");
  const IntPoly total = weighted_sun_sum(n, [](std::int64_t k) { return 4 * k + 3; });
  const Integer modulus = n;
  if (!poly_int_divisible(total, modulus))
    return make_report("thm1_first", {{"n", n}}, false, coefficient_witness(total, modulus, "x"));
  return make_report("thm1_first", {{"n", n}}, true, {},
                     "quotient " + brief(to_text(divide_coefficients(total, modulus))));
}

CheckReport thm1_second_check(std::int64_t n) {
  require(n >= 1, "thm1_second_check: need n >= 1");
  const Integer sum = second_sum(n);
  const Integer modulus = n;
  return make_report("thm1_second", {{"n", n}}, divides(modulus, sum),
                     "sum " + brief(sum.get_str()) + " = " + residue(sum, modulus),
                     "sum " + brief(sum.get_str()));
}

CheckReport remark_conjecture_check(RemarkKind kind, std::int64_t n_or_p) {
  require(n_or_p >= 1, "remark_conjecture_check: need n >= 1");
  const Integer sum = second_sum(n_or_p);
  const Integer n = n_or_p;
  Integer modulus;
  Integer target;
  std::string id;
  std::string param;
  if (kind == RemarkKind::mod2n2) {
    modulus = 2 * n * n;
    target = n * n;
    id = "remark_mod2n2";
    param = "n";
  } else {
    require(is_prime(n_or_p), "remark_conjecture_check: prime_mod_p3 needs a prime");
    modulus = n * n * n;
    target = 3 * n * n;
    id = "remark_prime_mod_p3";
    param = "p";
  }
  const bool ok = divides(modulus, sum - target);
  CheckReport r = make_report(id, {{param, n_or_p}}, ok,
                              "sum = " + residue(sum, modulus) + ", expected " + residue(target, modulus),
                              "sum " + brief(sum.get_str()));
  if (!ok) r.status = Status::finding;
  return r;
}

CheckReport identity_check(Identity id, std::int64_t n_or_p) {
  require(n_or_p >= 1, "identity_check: need n >= 1");
  const std::int64_t n = n_or_p;
  switch (id) {
    case Identity::sum2_7: {
      IntPoly lhs;
      for (std::int64_t k = 0; k <= n; ++k) lhs.add_scaled(family_poly(Family::franel, k), binom(n, k));
      const IntPoly rhs = sun_poly(n);
      return make_report("identity_sum2_7", {{"n", n}}, lhs == rhs,
                         "lhs " + brief(to_text(lhs)) + " != g_n " + brief(to_text(rhs)));
    }
    case Identity::sum2_11: {
      IntPoly lhs;
      for (std::int64_t k = 0; k <= n; ++k)
        lhs.add_scaled(sun_poly(k), sign(n - k) * binom(n, k) * binom(n + k, k));
      const IntPoly rhs = family_poly(Family::apery, n);
      return make_report("identity_sum2_11", {{"n", n}}, lhs == rhs,
                         "lhs " + brief(to_text(lhs)) + " != A_n " + brief(to_text(rhs)));
    }
    case Identity::sun_norm: {
      Integer weighted = 0;
      for (std::int64_t k = 0; k < n; ++k) weighted += (4 * k + 3) * evaluate(sun_poly(k), Integer(1));
      Rational l(weighted, Integer(3 * n * n));
      l.canonicalize();
      Rational rhs = 0;
      for (std::int64_t k = 0; k < n; ++k) {
        const Integer c = binom(n - 1, k);
        Rational term(binom(2 * k, k) * c * c, Integer(k + 1));
        term.canonicalize();
        rhs += term;
      }
      return make_report("identity_sun_norm", {{"n", n}}, l == rhs,
                         "lhs " + l.get_str() + " != rhs " + rhs.get_str(), "value " + brief(l.get_str()));
    }
    case Identity::sun_kgk: {
      require(n >= 3 && is_prime(n), "identity_check: sun_kgk needs an odd prime");
      Integer sum = 0;
      for (std::int64_t k = 0; k < n; ++k) sum += k * evaluate(sun_poly(k), Integer(1));
      const Integer modulus = Integer(n) * n;
      const Integer cleared = 4 * sum + 3;
      return make_report("identity_sun_kgk", {{"p", n}}, divides(modulus, cleared),
                         "4*sum+3 = " + residue(cleared, modulus), "sum " + brief(sum.get_str()));
    }
  }
  throw OutOfDomain("identity_check: unknown identity");
}

CheckReport single_sum_check(std::int64_t n, std::int64_t k) {
  require(n >= 1 && k >= 0 && k <= n - 1, "single_sum_check: need 0 <= k <= n-1");
  Integer inner = 0;
  for (std::int64_t i = 0; i <= k; ++i)
    inner += (binom(n, k + i + 1) + 4 * binom(n, k + i + 2)) * binom(k + i, i) * binom(k, i);
  const Integer value = binom(2 * k, k) * inner;
  const Integer modulus = n;
  return make_report("single_sum", {{"n", n}, {"k", k}}, divides(modulus, value),
                     "value " + brief(value.get_str()) + " = " + residue(value, modulus));
}

Integer telescope_u(std::int64_t n, std::int64_t j) {
  require(n >= 1 && j >= 0, "telescope_u: need n >= 1, j >= 0");
  Integer inner = 0;
  for (std::int64_t k = j; k < n; ++k) {
    const Integer c = binom(k, j);
    inner += (4 * k + 3) * c * c;
  }
  return binom(2 * j, j) * inner;
}

namespace {

Rational telescope_certificate(std::int64_t n, std::int64_t j) {
  const Integer nn = n;
  const Integer jj = j;
  const Integer c = binom(n - 1, j);
  const Integer bracket = (9 * jj + 6) * (jj + 1) * nn * nn +
                          (12 * jj * jj - 8 * jj * nn - 4 * nn + 14 * jj + 4) * nn * nn * nn;
  const Integer denominator = (jj + 1) * (jj + 1) * (jj + 1) * (jj + 2);
  Rational r(-binom(2 * j, j) * c * c * bracket, denominator);
  r.canonicalize();
  return r;
}

}  // namespace

CheckReport telescope_check(std::int64_t n, std::int64_t j) {
  require(n >= 1 && j >= 0 && j <= n - 1, "telescope_check: need 0 <= j <= n-1");
  const Integer uj = telescope_u(n, j);
  const Integer next = telescope_u(n, j + 1);
  const Integer modulus = n;
  Params params{{"n", n}, {"j", j}};
  if (!divides(modulus, uj))
    return make_report("telescope", std::move(params), false, "u_j = " + residue(uj, modulus));
  const Rational certificate = telescope_certificate(n, j);
  const Rational difference(next - uj);
  return make_report("telescope", std::move(params), difference == certificate,
                     "u_{j+1} - u_j = " + difference.get_str() + " but certificate gives " +
                         certificate.get_str(),
                     "u_j " + brief(uj.get_str()));
}

CheckReport multi_sum_identity_check(std::int64_t n) {
  require(n >= 1, "multi_sum_identity_check: need n >= 1");
  const IntPoly lhs = weighted_sun_sum(n, [](std::int64_t m) { return 4 * m + 3; });
  const Integer nn = n;
  std::vector<Integer> rhs_coeffs(static_cast<std::size_t>(n));
  Integer quadratic_rhs = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    Integer linear_inner = 0;
    Integer quadratic_inner = 0;
    for (std::int64_t i = 0; i <= k; ++i) {
      const Integer shape = binom(k + i, i) * binom(k, i);
      const Integer b1 = binom(n, k + i + 1);
      const Integer b2 = binom(n, k + i + 2);
      const Integer b3 = binom(n, k + i + 3);
      linear_inner += ((4 * nn - 1) * b1 - 4 * b2) * shape;
      quadratic_inner += ((8 * nn * nn - 4 * nn + 1) * b1 - (16 * nn - 12) * b2 + 16 * b3) * shape;
    }
    const Integer central = binom(2 * k, k);
    rhs_coeffs[static_cast<std::size_t>(k)] = central * linear_inner;
    quadratic_rhs += sign(k) * central * quadratic_inner;
  }
  const IntPoly rhs(std::move(rhs_coeffs));
  Params params{{"n", n}};
  if (!(lhs == rhs))
    return make_report("multi_sum_identity", std::move(params), false,
                       "linear weight: lhs " + brief(to_text(lhs)) + " != rhs " + brief(to_text(rhs)));
  const Integer quadratic_lhs = second_sum(n);
  return make_report("multi_sum_identity", std::move(params), quadratic_lhs == quadratic_rhs,
                     "quadratic weight at x=-1: lhs " + brief(quadratic_lhs.get_str()) + " != rhs " +
                         brief(quadratic_rhs.get_str()));
}

}  // namespace sunpoly
