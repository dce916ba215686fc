#include "doctest.h"
#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/recurrence.hpp"

using namespace sunpoly;

TEST_SUITE("recurrence") {
  TEST_CASE("recurrence coefficients") {
    const auto c = recurrence_coeffs(1);
    CHECK(c[0] == 64);
    CHECK(c[1] == 16);
    CHECK(c[2] == -6);
    CHECK(c[3] == -3);
  }

  TEST_CASE("S satisfies the recurrence") {
    CHECK(s_rec_check(1).passed());
    CHECK(s_rec_check(2).passed());
    CHECK(s_rec_check(50).passed());
    for (std::int64_t n = 1; n <= 400; ++n) REQUIRE(s_rec_check(n).passed());
  }

  TEST_CASE("S congruences") {
    CHECK(s_mod_check(SModKind::rec1, 3).passed());
    CHECK(s_combination(3) == -6);
    CHECK(s_mod_check(SModKind::rec11, 1).passed());
    CHECK(s_mod_check(SModKind::rec10, 1).passed());
    for (std::int64_t n = 1; n <= 300; ++n)
      for (auto kind : {SModKind::rec10, SModKind::rec11, SModKind::rec1}) REQUIRE(s_mod_check(kind, n).passed());
  }

  TEST_CASE("rewritten sum") {
    CHECK(binomial_weighted_s_sum(1) == 1);
    CHECK(rewrite_identity_check(1).passed());
    CHECK(rewrite_identity_check(2).passed());
    CHECK(rewrite_identity_check(6).passed());
    for (std::int64_t m = 0; m <= 60; ++m) REQUIRE(s_bridge_sum(m) == s_value(m + 3));
    for (std::int64_t n = 1; n <= 100; ++n) REQUIRE(rewrite_identity_check(n).passed());
  }

  TEST_CASE("second sum against the S sum modulo 2n^2") {
    CHECK(multisum3_check(1).passed());
    CHECK(multisum3_check(2).passed());
    CHECK(multisum3_check(5).passed());
    for (std::int64_t n = 1; n <= 100; ++n) {
      REQUIRE(multisum3_check(n).passed());
      REQUIRE(divides(2 * Integer(n) * n, second_sum(n) - binomial_weighted_s_sum(n)));
    }
  }

  TEST_CASE("T sequence") {
    const long expected[] = {-1, 4, 6, 8, -10, -144, -672, -1648};
    for (std::int64_t n = 1; n <= 8; ++n) CHECK(conjecture_t(n) == expected[n - 1]);
    CHECK(conj61_check(1).passed());
    CHECK(conj61_check(2).passed());
    CHECK(conj61_check(4).passed());
    CHECK(conj61_prime_check(3).passed());
    CHECK(conj61_prime_check(5).passed());
    CHECK(conj61_prime_check(7).passed());
    CHECK_THROWS_AS(conj61_prime_check(9), OutOfDomain);
    for (std::int64_t n = 1; n <= 200; ++n) {
      const auto r = conj61_check(n);
      REQUIRE(r.status != Status::fail);
      REQUIRE(r.status != Status::error);
    }
  }
}
