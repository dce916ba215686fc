#pragma once

// Sun, Franel and Apery polynomial families, the sequence S_n = f_{n-3}(-1),
// and the identities and congruences built from them.

#include <cstdint>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "sunpoly/report.hpp"
#include "sunpoly/ring.hpp"

namespace sunpoly {

enum class Family { sun, franel, apery };

std::string_view to_string(Family f);

/// Sun:    sum_k C(n,k)^2 C(2k,k)   x^k
/// Franel: sum_k C(n,k)^2 C(2k,n)   x^k
/// Apery:  sum_k C(n,k)^2 C(n+k,k)^2 x^k
IntPoly family_poly(Family id, std::int64_t n);
Integer family_value(Family id, std::int64_t n, const Integer& x);

/// Shared memo of Sun polynomials g_n(x).
const IntPoly& sun_poly(std::int64_t n);

/// S_0, S_1, ... from the defining sum
///   S_n = sum_k (-1)^k C(2k,k) C(n-3,k) C(k,n-k-3),  S_n = 0 for n < 3.
/// Extension is serialized; reads of an existing prefix take a shared lock.
class SSequence {
 public:
  Integer at(std::int64_t n);
  /// Ensures S_0..S_n are cached.
  void extend_to(std::int64_t n);

 private:
  std::shared_mutex mutex_;
  std::vector<Integer> values_;
};

SSequence& s_sequence();
Integer s_value(std::int64_t n);

/// g_k(-1), evaluated from the Sun polynomial and memoized.
const Integer& sun_at_minus_one(std::int64_t k);

/// sum_{k<n} (8k^2+12k+5) g_k(-1)
Integer second_sum(std::int64_t n);

/// Every coefficient of sum_{k<n} (4k+3) g_k(x) divisible by n.
CheckReport thm1_first_check(std::int64_t n);
/// sum_{k<n} (8k^2+12k+5) g_k(-1) = 0 mod n.
CheckReport thm1_second_check(std::int64_t n);

enum class RemarkKind { mod2n2, prime_mod_p3 };

/// Stronger conjectured forms of the second claim. A failure is a finding.
CheckReport remark_conjecture_check(RemarkKind kind, std::int64_t n_or_p);

enum class Identity { sum2_7, sum2_11, sun_norm, sun_kgk };

CheckReport identity_check(Identity id, std::int64_t n_or_p);

/// C(2k,k) sum_{i<=k} (C(n,k+i+1) + 4 C(n,k+i+2)) C(k+i,i) C(k,i) = 0 mod n.
CheckReport single_sum_check(std::int64_t n, std::int64_t k);

/// u_j = C(2j,j) sum_{k=j}^{n-1} (4k+3) C(k,j)^2
Integer telescope_u(std::int64_t n, std::int64_t j);

/// u_j = C(2j,j) sum_{k=j}^{n-1} (4k+3) C(k,j)^2 is 0 mod n, and
/// u_{j+1} - u_j matches its closed-form telescoping certificate.
CheckReport telescope_check(std::int64_t n, std::int64_t j);

/// The linear-weight sum rewritten through the Chu-Vandermonde expansion and
/// the column-sum closed forms, and the quadratic-weight analogue at x = -1.
CheckReport multi_sum_identity_check(std::int64_t n);

}  // namespace sunpoly
