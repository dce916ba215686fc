#pragma once

// q-integers, Gaussian binomials, cyclotomic polynomials, reciprocal and
// unimodal shape predicates, the cyclotomic exponent ledger of the
// q-analogue of the triple-binomial congruence, and remainder arithmetic
// modulo Phi_d(q).

#include <cstddef>
#include <cstdint>
#include <map>

#include "sunpoly/report.hpp"
#include "sunpoly/ring.hpp"

namespace sunpoly {

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
IntPoly q_int(std::int64_t n);

/// Rows of the memoized Pascal-type table [n,k] = [n-1,k-1] + q^k [n-1,k].
inline constexpr std::int64_t kQBinomialTableRows = 72;

/// Gaussian binomial [n,k]_q; the zero polynomial unless 0 <= k <= n.
/// Rows below kQBinomialTableRows come from the Pascal table, larger rows
/// from q_binom_product.
IntPoly q_binom(std::int64_t n, std::int64_t k);

/// prod_{i=1}^{k} (1 - q^(n-k+i)) / (1 - q^i), each division checked exact.
IntPoly q_binom_product(std::int64_t n, std::int64_t k);

/// Phi_d(q), from q^d - 1 divided by the cyclotomics of the proper divisors.
const IntPoly& cyclotomic(std::int64_t d);

struct ShapeFlags {
  bool reciprocal = false;
  bool unimodal = false;
  bool nonnegative = false;

  bool all() const { return reciprocal && unimodal && nonnegative; }
};

/// Flags over a_0..a_d, d the degree. The zero polynomial has all three.
ShapeFlags shape_check(const IntPoly& p);

/// For reciprocal unimodal non-negative a and b: is a*b reciprocal and
/// unimodal? Throws OutOfDomain when a hypothesis fails.
bool lemma_product_check(const IntPoly& a, const IntPoly& b);

/// Quotient (1-q^m) p / (1-q^n) has non-negative coefficients. Throws
/// OutOfDomain when p's shape or m <= n fails, InexactDivision when the
/// quotient is not a polynomial.
CheckReport rsw_check(const IntPoly& p, std::int64_t m, std::int64_t n);

/// e_d for 2 <= d <= 2n:
///   -[d | m+n] + fl((m+n-2)/d) + fl(2n/d) - fl((m-1)/d) - fl((n-1)/d)
///   - fl(m/d) - fl(n/d) - fl((n-m)/d)
struct PhiExponentLedger {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::map<std::int64_t, std::int64_t> exponents;

  bool all_nonnegative() const;
  /// prod_d Phi_d(q)^e_d; requires all_nonnegative().
  IntPoly product() const;
};

PhiExponentLedger phi_exponent_ledger(std::int64_t m, std::int64_t n);

/// (1-q)[m+n-2,m-1][n,m][2n,n] / (1-q^(m+n)) is a polynomial with
/// non-negative coefficients, equal to the ledger product when m <= n.
CheckReport thm_q_analog_check(std::int64_t m, std::int64_t n);

/// The quotient above (zero when m > n). Throws InexactDivision otherwise.
IntPoly q_analog_quotient(std::int64_t m, std::int64_t n);

/// Remainder of p modulo Phi_d(q).
IntPoly mod_phi_reduce(const IntPoly& p, std::int64_t d);

/// [n,k]_q = C(n1,k1) [n0,k0]_q mod Phi_d(q), n = n1 d + n0, k = k1 d + k0.
CheckReport q_lucas_check(std::int64_t n, std::int64_t k, std::int64_t d);

/// [m+n,k]_q = sum_j [m,j]_q [n,k-j]_q q^((m-j)(k-j)).
bool q_chu_check(std::int64_t m, std::int64_t n, std::int64_t k);

/// [d-1,k]_{q^2} q^(k(k+1)) = (-1)^k mod Phi_d(q). Asserted for odd d; for
/// even d a mismatch is reported as a finding.
CheckReport inverse_power_congruence_check(std::int64_t d, std::int64_t k);

}  // namespace sunpoly
