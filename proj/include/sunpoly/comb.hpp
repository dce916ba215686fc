#pragma once

// Binomial coefficients and the purely binomial divisibility results:
// the Chu-Vandermonde square expansion, the two weighted column sums, the
// triple-binomial congruence mod m+n and Gessel's companion congruence.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sunpoly/report.hpp"
#include "sunpoly/ring.hpp"

namespace sunpoly {

/// Pascal triangle rows [0, rows). Immutable after construction.
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t rows);

  std::size_t rows() const { return rows_.size(); }
  bool covers(std::int64_t n) const { return n >= 0 && static_cast<std::size_t>(n) < rows_.size(); }
  /// Requires covers(n); zero outside 0 <= k <= n.
  const Integer& at(std::int64_t n, std::int64_t k) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

inline constexpr std::size_t kDefaultBinomialRows = 768;

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Rows below
/// kDefaultBinomialRows come from a shared table, larger ones from GMP.
/// Throws OutOfDomain for n < 0.
Integer binom(std::int64_t n, std::int64_t k);

/// C(n, 0..n).
std::vector<Integer> binomial_row(std::int64_t n);

/// C(x, n) = x(x-1)...(x-n+1)/n! as a rational polynomial in x.
struct BinomialPolynomial {
  std::int64_t n = 0;
  RatPoly poly;
};

BinomialPolynomial binom_poly(std::int64_t n);

/// C(x,n)^2 = sum_k C(x,n+k) C(n+k,k) C(n,k) as an identity in Q[x].
bool lemma_one_check(std::int64_t n);

/// Both weighted sums of C(m,k) over m in [k, n-1] against their closed forms.
bool lemma_two_check(std::int64_t n, std::int64_t k);

/// (m+n) | C(m+n-2, m-1) C(n,m) C(2n,n).
CheckReport theorem2_check(std::int64_t m, std::int64_t n);

/// (m+n) | m C(2m,m) C(2n,n) / 2.
CheckReport gessel_check(std::int64_t m, std::int64_t n);

/// With E = C(m+n,m) C(n+1,m) C(2n,n) (3m^2+n^2+m+n): (m+n)(n+1) | E and
/// E/((m+n)(n+1)) = 0 mod (m+n+1). (0,0) is outside the domain.
CheckReport lemma_three_check(std::int64_t m, std::int64_t n);

/// Deterministic trial division.
bool is_prime(std::int64_t n);

}  // namespace sunpoly
