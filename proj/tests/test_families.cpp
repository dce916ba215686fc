#include "doctest.h"
#include "helpers.hpp"
#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/poly_format.hpp"

using namespace sunpoly;
using test_support::from_ints;

TEST_SUITE("families") {
  TEST_CASE("family polynomials") {
    CHECK(family_poly(Family::sun, 2) == from_ints({1, 8, 6}));
    CHECK(family_poly(Family::franel, 1) == from_ints({0, 2}));
    CHECK(family_poly(Family::apery, 0) == from_ints({1}));
    CHECK(family_value(Family::sun, 2, 1) == 15);
    CHECK(family_value(Family::sun, 2, -1) == -1);
    CHECK(family_value(Family::sun, 0, 12345) == 1);
    CHECK_THROWS_AS(family_poly(Family::sun, -1), OutOfDomain);
  }

  TEST_CASE("coefficients are non-negative") {
    for (auto f : {Family::sun, Family::franel, Family::apery})
      for (std::int64_t n = 0; n <= 40; ++n)
        for (const auto& c : family_poly(f, n).coeffs()) REQUIRE(sgn(c) >= 0);
  }

  TEST_CASE("Sun polynomial at 1 against a direct sum") {
    for (std::int64_t n = 0; n <= 200; ++n) {
      Integer direct = 0;
      for (std::int64_t k = 0; k <= n; ++k) direct += binom(n, k) * binom(n, k) * binom(2 * k, k);
      REQUIRE(evaluate(sun_poly(n), Integer(1)) == direct);
      REQUIRE(sun_poly(n) == family_poly(Family::sun, n));
    }
  }

  TEST_CASE("S sequence") {
    const long expected[] = {0, 0, 0, 1, -2, 2, 16, -134, 548, -736, -7744, 72538, -323012};
    for (std::int64_t n = 0; n <= 12; ++n) CHECK(s_value(n) == expected[n]);
    for (std::int64_t n = 3; n <= 400; ++n)
      REQUIRE(s_value(n) == family_value(Family::franel, n - 3, -1));
  }

  TEST_CASE("first claim") {
    auto r = thm1_first_check(1);
    CHECK(r.passed());
    CHECK(r.detail == "quotient 3");
    r = thm1_first_check(2);
    CHECK(r.passed());
    CHECK(r.detail == "quotient 5 + 7*x");
    CHECK(thm1_first_check(6).passed());
    for (std::int64_t n = 1; n <= 80; ++n) REQUIRE(thm1_first_check(n).passed());
  }

  TEST_CASE("second claim") {
    const long sums[] = {5, -20, -81, 1840, -9925};
    for (std::int64_t n = 1; n <= 5; ++n) CHECK(second_sum(n) == sums[n - 1]);
    CHECK(thm1_second_check(3).detail == "sum -81");
    for (std::int64_t n = 1; n <= 200; ++n) REQUIRE(thm1_second_check(n).passed());
  }

  TEST_CASE("stronger remark forms") {
    CHECK(remark_conjecture_check(RemarkKind::mod2n2, 2).passed());
    CHECK(remark_conjecture_check(RemarkKind::mod2n2, 3).passed());
    CHECK(remark_conjecture_check(RemarkKind::prime_mod_p3, 3).passed());
    CHECK_THROWS_AS(remark_conjecture_check(RemarkKind::prime_mod_p3, 4), OutOfDomain);
    for (std::int64_t n = 1; n <= 120; ++n) REQUIRE(remark_conjecture_check(RemarkKind::mod2n2, n).passed());
  }

  TEST_CASE("identities") {
    CHECK(identity_check(Identity::sum2_7, 1).passed());
    CHECK(identity_check(Identity::sun_norm, 2).passed());
    CHECK(identity_check(Identity::sun_norm, 2).detail == "value 2");
    auto r = identity_check(Identity::sun_kgk, 3);
    CHECK(r.passed());
    CHECK(r.detail == "sum 33");
    CHECK_THROWS_AS(identity_check(Identity::sun_kgk, 2), OutOfDomain);
    CHECK_THROWS_AS(identity_check(Identity::sun_kgk, 9), OutOfDomain);
    for (std::int64_t n = 1; n <= 80; ++n) {
      REQUIRE(identity_check(Identity::sum2_7, n).passed());
      REQUIRE(identity_check(Identity::sum2_11, n).passed());
      REQUIRE(identity_check(Identity::sun_norm, n).passed());
    }
    for (std::int64_t p = 3; p < 100; ++p)
      if (is_prime(p)) REQUIRE(identity_check(Identity::sun_kgk, p).passed());
  }

  TEST_CASE("single sum") {
    CHECK(single_sum_check(2, 0).passed());
    CHECK(single_sum_check(3, 1).passed());
    CHECK(single_sum_check(5, 4).passed());
    CHECK_THROWS_AS(single_sum_check(3, 3), OutOfDomain);
    for (std::int64_t n = 1; n <= 60; ++n)
      for (std::int64_t k = 0; k < n; ++k) REQUIRE(single_sum_check(n, k).passed());
  }

  TEST_CASE("telescoping certificate") {
    CHECK(telescope_u(2, 0) == 10);
    CHECK(telescope_u(2, 0) == 2 * 2 * 2 + 2);
    const long u3[] = {21, 102, 66, 0};
    for (std::int64_t j = 0; j <= 3; ++j) CHECK(telescope_u(3, j) == u3[j]);
    CHECK(telescope_check(2, 0).passed());
    CHECK(telescope_check(3, 1).passed());
    CHECK(telescope_check(5, 4).passed());
    for (std::int64_t n = 1; n <= 60; ++n)
      for (std::int64_t j = 0; j < n; ++j) {
        REQUIRE(telescope_check(n, j).passed());
        REQUIRE(divides(Integer(n), telescope_u(n, j) - telescope_u(n, 0)));
      }
  }

  TEST_CASE("multi-sum identity") {
    CHECK(multi_sum_identity_check(1).passed());
    CHECK(multi_sum_identity_check(2).passed());
    CHECK(multi_sum_identity_check(4).passed());
    for (std::int64_t n = 1; n <= 60; ++n) REQUIRE(multi_sum_identity_check(n).passed());
  }
}
