#pragma once

// The order-three recurrence for S_n with cubic coefficients, its
// consequences mod 3, mod 4 and mod n, the binomial rewrite behind the
// quadratic-weight congruence, and the open conjecture on
//   T_n = sum_{k=1}^{n} (-1)^k (S_{k+2} + 12 S_{k+1} + 16 S_k) / k.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "sunpoly/report.hpp"
#include "sunpoly/ring.hpp"

namespace sunpoly {

/// A term of T_n that is not an integer; would contradict the mod-n
/// congruence for S_{k+2} + 12 S_{k+1} + 16 S_k.
class NonIntegralTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// {c0(n), c1(n), c2(n), c3(n)} with c3 S_{n+3} + c2 S_{n+2} + c1 S_{n+1} + c0 S_n = 0:
///   c3 = 5n^3 - 8n^2
///   c2 = 45n^3 - 117n^2 + 90n - 24
///   c1 = 200n^3 - 720n^2 + 824n - 288
///   c0 = 160n^3 - 736n^2 + 1024n - 384
std::array<Integer, 4> recurrence_coeffs(std::int64_t n);

CheckReport s_rec_check(std::int64_t n);

enum class SModKind { rec10, rec11, rec1 };

std::string_view to_string(SModKind kind);

/// rec10: S_{3n} = S_{3n+1} = -S_{3n+2} mod 3
/// rec11: S_{4n+2} = 0 mod 4
/// rec1:  S_{n+2} + 12 S_{n+1} + 16 S_n = 0 mod n
CheckReport s_mod_check(SModKind kind, std::int64_t n);

/// S_{k+2} + 12 S_{k+1} + 16 S_k
Integer s_combination(std::int64_t k);

/// sum_{k=0}^{m} (-1)^k C(2k,k) C(m,k) C(k,m-k), summed term by term from
/// binomials (independent of the cached S sequence).
Integer s_bridge_sum(std::int64_t m);

/// sum_{m<n} (C(n,m+1) + 12 C(n,m+2) + 16 C(n,m+3)) S_{m+3}
Integer binomial_weighted_s_sum(std::int64_t n);

CheckReport rewrite_identity_check(std::int64_t n);
CheckReport multisum3_check(std::int64_t n);

/// Throws NonIntegralTerm if some term does not divide exactly.
Integer conjecture_t(std::int64_t n);

/// T_n = 0 mod n; a failure is a finding.
CheckReport conj61_check(std::int64_t n);
/// T_p = 2p (-1)^((p+1)/2) mod p^2 for odd primes p; a failure is a finding.
CheckReport conj61_prime_check(std::int64_t p);

}  // namespace sunpoly
