#include <optional>

#include "doctest.h"
#include "sunpoly/comb.hpp"

using namespace sunpoly;

TEST_SUITE("comb") {
  TEST_CASE("binom") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(1, -1) == 0);
    CHECK(binom(6, 3) == 20);
    CHECK(binom(2, 3) == 0);
    CHECK_THROWS_AS(binom(-1, 0), OutOfDomain);
    for (std::int64_t n = 1; n <= 200; ++n)
      for (std::int64_t k = 1; k <= n; ++k) REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
  }

  TEST_CASE("binom beyond the cached table") {
    const std::int64_t n = static_cast<std::int64_t>(kDefaultBinomialRows) + 40;
    CHECK(binom(n, 7) == binom(n - 1, 6) + binom(n - 1, 7));
    const auto row = binomial_row(n);
    CHECK(row[17] == binom(n, 17));
    CHECK(row.back() == 1);
  }

  TEST_CASE("binomial polynomial") {
    CHECK(binom_poly(0).poly == RatPoly{Rational(1)});
    CHECK(binom_poly(2).poly == RatPoly{Rational(0), Rational(-1, 2), Rational(1, 2)});
    CHECK(evaluate(binom_poly(2).poly, Rational(5)) == 10);
    for (std::int64_t n = 0; n <= 12; ++n) {
      for (long x = -20; x <= 20; ++x) {
        Rational falling = 1;
        Rational factorial = 1;
        for (std::int64_t i = 0; i < n; ++i) {
          falling *= Rational(x - i);
          factorial *= Rational(i + 1);
        }
        REQUIRE(evaluate(binom_poly(n).poly, Rational(x)) == falling / factorial);
      }
    }
  }

  TEST_CASE("square of a binomial polynomial") {
    CHECK(lemma_one_check(0));
    CHECK(lemma_one_check(1));
    CHECK(lemma_one_check(5));
    for (std::int64_t n = 0; n <= 30; ++n) REQUIRE(lemma_one_check(n));
  }

  TEST_CASE("weighted column sums") {
    CHECK(lemma_two_check(1, 0));
    CHECK(lemma_two_check(5, 2));
    CHECK(lemma_two_check(2, 2));
    for (std::int64_t n = 1; n <= 100; ++n)
      for (std::int64_t k = 0; k <= n; ++k) REQUIRE(lemma_two_check(n, k));
    CHECK_THROWS_AS(lemma_two_check(2, 3), OutOfDomain);
  }

  TEST_CASE("divisibility by m+n") {
    auto r = theorem2_check(1, 1);
    CHECK(r.passed());
    CHECK(r.detail == "product 2");
    r = theorem2_check(2, 3);
    CHECK(r.passed());
    CHECK(r.detail == "product 180");
    r = theorem2_check(5, 3);
    CHECK(r.passed());
    CHECK(r.detail == "product 0");
    CHECK_THROWS_AS(theorem2_check(0, 3), OutOfDomain);
  }

  TEST_CASE("companion congruence") {
    auto r = gessel_check(1, 1);
    CHECK(r.passed());
    CHECK(r.detail == "value 2");
    r = gessel_check(2, 1);
    CHECK(r.passed());
    CHECK(r.detail == "value 12");
    r = gessel_check(3, 2);
    CHECK(r.passed());
    CHECK(r.detail == "value 180");
  }

  TEST_CASE("quotient divisible by m+n+1") {
    auto r = lemma_three_check(0, 1);
    CHECK(r.passed());
    CHECK(r.detail == "quotient 2");
    r = lemma_three_check(1, 1);
    CHECK(r.passed());
    CHECK(r.detail == "quotient 12");
    CHECK(lemma_three_check(3, 2).passed());
    CHECK_THROWS_AS(lemma_three_check(0, 0), OutOfDomain);
  }

  TEST_CASE("the quadratic factor is needed") {
    // Search for the first (m,n) where the expression without 3m^2+n^2+m+n
    // is not divisible by (m+n)(n+1)(m+n+1).
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;
    for (std::int64_t s = 1; s <= 40 && !witness; ++s)
      for (std::int64_t m = 0; m <= s && !witness; ++m) {
        const std::int64_t n = s - m;
        const Integer e = binom(m + n, m) * binom(n + 1, m) * binom(2 * n, n);
        if (!divides(Integer(m + n) * (n + 1) * (m + n + 1), e)) witness = {m, n};
      }
    REQUIRE(witness.has_value());
    CHECK(witness->first == 0);
    CHECK(witness->second == 1);
    CHECK(lemma_three_check(0, 1).passed());
  }

  TEST_CASE("grid sample") {
    for (std::int64_t m = 1; m <= 60; ++m)
      for (std::int64_t n = 1; n <= 60; ++n) {
        REQUIRE(theorem2_check(m, n).passed());
        REQUIRE(gessel_check(m, n).passed());
        REQUIRE(lemma_three_check(m - 1, n).passed());
      }
  }

  TEST_CASE("primality") {
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
  }
}
