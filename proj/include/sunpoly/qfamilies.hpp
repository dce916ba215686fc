#pragma once

// q-Sun polynomials g_n(x;q) = sum_k [n,k]_q^2 [2k,k]_q x^k and the three
// congruences modulo products of cyclotomic polynomials over divisors of n,
// together with their q -> 1 specializations.

#include <cstdint>
#include <string_view>
#include <vector>

#include "sunpoly/report.hpp"
#include "sunpoly/ring.hpp"

namespace sunpoly {

enum class ModulusClass { odd_gt1, even, even_gt2 };

enum class Thm5Congruence { oddcong, evencong1, evencong2 };

std::string_view to_string(Thm5Congruence c);

/// Coefficient of x^j in g_n(x;q), i.e. [n,j]_q^2 [2j,j]_q. Memoized.
const IntPoly& g_q_term(std::int64_t n, std::int64_t j);

/// g_n(x;q) by x-degree; squared substitutes q -> q^2.
std::vector<IntPoly> g_q_slices(std::int64_t n, bool squared);
XQPoly g_q(std::int64_t n, bool squared);

/// prod of Phi_d(q) over divisors d of n in the class; 1 when empty.
IntPoly modulus(std::int64_t n, ModulusClass cls);

/// The left-minus-right side of a congruence, by x-degree, as a
/// q-polynomial per slice:
///   oddcong:   sum_{k<n} q^{2k} ((1+q)^2 [k+1]_{q^2} - 1) g_k(x;q^2)
///   evencong1: sum_{k<n} q^k g_k(x;q)
///   evencong2: sum_{j<n} x^j [j+1]_{q^2} [2j,j]_q sum_{k=j}^{n-1} q^k [k,j]_q [k+1,j+1]_q
std::vector<IntPoly> thm5_slices(Thm5Congruence which, std::int64_t n);

/// Every x-slice divisible by the congruence's cyclotomic modulus. The
/// witness names the first offending x-degree.
CheckReport thm5_check(Thm5Congruence which, std::int64_t n);

/// Phi_d(1): p when d is a power of the prime p, otherwise 1 (d >= 2).
Integer phi_at_one(std::int64_t d);

/// The q -> 1 consequences with n = 2^r n1, n1 odd:
/// sum (4k+3) g_k(x) = 0 mod n1, sum g_k(x) = 0 mod 2^r,
/// 2 sum k g_k(x) - sum g_k(x) = 0 mod 2^r, plus the Phi_d(1) products.
CheckReport q1_specialization_check(std::int64_t n);

}  // namespace sunpoly
