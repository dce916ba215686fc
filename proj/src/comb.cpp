#include "sunpoly/comb.hpp"

#include <string>

#include "sunpoly/memo.hpp"

namespace sunpoly {

namespace {

const BinomialTable& shared_table() {
  static const BinomialTable table(kDefaultBinomialRows);
  return table;
}

void require(bool ok, const char* what) {
  if (!ok) throw OutOfDomain(what);
}

std::string residue_witness(const Integer& value, const Integer& modulus) {
  return "value " + value.get_str() + " = " + mod_floor(value, modulus).get_str() + " mod " +
         modulus.get_str();
}

}  // namespace

BinomialTable::BinomialTable(std::size_t rows) {
  rows_.reserve(rows);
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<Integer> row(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (std::size_t k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    rows_.push_back(std::move(row));
  }
}

const Integer& BinomialTable::at(std::int64_t n, std::int64_t k) const {
  static const Integer zero = 0;
  if (k < 0 || k > n) return zero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer binom(std::int64_t n, std::int64_t k) {
  require(n >= 0, "binom: negative upper index");
  if (k < 0 || k > n) return 0;
  const auto& table = shared_table();
  if (table.covers(n)) return table.at(n, k);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<Integer> binomial_row(std::int64_t n) {
  require(n >= 0, "binomial_row: negative n");
  const auto& table = shared_table();
  std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
  if (table.covers(n)) {
    for (std::int64_t k = 0; k <= n; ++k) row[static_cast<std::size_t>(k)] = table.at(n, k);
    return row;
  }
  row[0] = 1;
  for (std::int64_t k = 0; k < n; ++k) {
    auto& next = row[static_cast<std::size_t>(k) + 1];
    mpz_mul_ui(next.get_mpz_t(), row[static_cast<std::size_t>(k)].get_mpz_t(),
               static_cast<unsigned long>(n - k));
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return row;
}

BinomialPolynomial binom_poly(std::int64_t n) {
  require(n >= 0, "binom_poly: negative n");
  static ConcurrentMemo<std::int64_t, RatPoly> memo;
  const RatPoly& poly = memo.get(n, [n] {
    IntPoly falling = IntPoly::constant(1);
    Integer factorial = 1;
    for (std::int64_t i = 0; i < n; ++i) {
      falling = multiply_schoolbook(falling, IntPoly{Integer(-i), Integer(1)});
      factorial *= i + 1;
    }
    RatPoly r = to_rational(falling);
    r.scale(Rational(1, 1) / Rational(factorial));
    return r;
  });
  return {n, poly};
}

bool lemma_one_check(std::int64_t n) {
  require(n >= 0, "lemma_one_check: negative n");
  const RatPoly& base = binom_poly(n).poly;
  const RatPoly lhs = base * base;
  RatPoly rhs;
  for (std::int64_t k = 0; k <= n; ++k) {
    const Rational weight(binom(n + k, k) * binom(n, k));
    rhs.add_scaled(binom_poly(n + k).poly, weight);
  }
  return lhs == rhs;
}

bool lemma_two_check(std::int64_t n, std::int64_t k) {
  require(n >= 1 && k >= 0 && k <= n, "lemma_two_check: need 1 <= n and 0 <= k <= n");
  Integer linear = 0;
  Integer quadratic = 0;
  for (std::int64_t m = k; m < n; ++m) {
    const Integer c = binom(m, k);
    linear += (4 * m + 3) * c;
    quadratic += Integer(8 * m * m + 12 * m + 5) * c;
  }
  const Integer linear_closed = (4 * n - 1) * binom(n, k + 1) - 4 * binom(n, k + 2);
  const Integer quadratic_closed = Integer(8 * n * n - 4 * n + 1) * binom(n, k + 1) -
                                   (16 * n - 12) * binom(n, k + 2) + 16 * binom(n, k + 3);
  return linear == linear_closed && quadratic == quadratic_closed;
}

CheckReport theorem2_check(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "theorem2_check: need m, n >= 1");
  const Integer product = binom(m + n - 2, m - 1) * binom(n, m) * binom(2 * n, n);
  const Integer modulus = m + n;
  return make_report("theorem2", {{"m", m}, {"n", n}}, divides(modulus, product),
                     residue_witness(product, modulus), "product " + product.get_str());
}

CheckReport gessel_check(std::int64_t m, std::int64_t n) {
  require(m >= 1 && n >= 1, "gessel_check: need m, n >= 1");
  Integer doubled = m * binom(2 * m, m) * binom(2 * n, n);
  // C(2m,m) is even for m >= 1, so the halving is exact.
  if (!mpz_even_p(doubled.get_mpz_t()))
    return make_report("gessel", {{"m", m}, {"n", n}}, false, "odd product " + doubled.get_str());
  const Integer value = doubled / 2;
  const Integer modulus = m + n;
  return make_report("gessel", {{"m", m}, {"n", n}}, divides(modulus, value),
                     residue_witness(value, modulus), "value " + value.get_str());
}

CheckReport lemma_three_check(std::int64_t m, std::int64_t n) {
  require(m >= 0 && n >= 0 && (m != 0 || n != 0), "lemma_three_check: need m, n >= 0, (m,n) != (0,0)");
  const Integer e = binom(m + n, m) * binom(n + 1, m) * binom(2 * n, n) *
                    Integer(3 * m * m + n * n + m + n);
  const Integer denominator = Integer(m + n) * (n + 1);
  Params params{{"m", m}, {"n", n}};
  if (!divides(denominator, e))
    return make_report("lemma_three", std::move(params), false,
                       "E = " + e.get_str() + " not divisible by (m+n)(n+1) = " + denominator.get_str());
  const Integer quotient = e / denominator;
  const Integer modulus = m + n + 1;
  return make_report("lemma_three", std::move(params), divides(modulus, quotient),
                     residue_witness(quotient, modulus), "quotient " + quotient.get_str());
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace sunpoly
