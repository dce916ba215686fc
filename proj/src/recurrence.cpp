#include "sunpoly/recurrence.hpp"

#include <string>

#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/memo.hpp"

namespace sunpoly {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw OutOfDomain(what);
}

std::string residue(const Integer& value, const Integer& modulus) {
  return mod_floor(value, modulus).get_str() + " mod " + modulus.get_str();
}

Integer cubic(std::int64_t n, long a3, long a2, long a1, long a0) {
  const Integer x = n;
  return ((a3 * x + a2) * x + a1) * x + a0;
}

CheckReport as_finding(CheckReport r) {
  if (r.status == Status::fail) r.status = Status::finding;
  return r;
}

}  // namespace

std::array<Integer, 4> recurrence_coeffs(std::int64_t n) {
  return {cubic(n, 160, -736, 1024, -384), cubic(n, 200, -720, 824, -288), cubic(n, 45, -117, 90, -24),
          cubic(n, 5, -8, 0, 0)};
}

CheckReport s_rec_check(std::int64_t n) {
  require(n >= 1, "s_rec_check: need n >= 1");
  const auto c = recurrence_coeffs(n);
  SSequence& s = s_sequence();
  s.extend_to(n + 3);
  Integer total = 0;
  for (std::int64_t i = 0; i < 4; ++i) total += c[static_cast<std::size_t>(i)] * s.at(n + i);
  return make_report("s_rec", {{"n", n}}, sgn(total) == 0, "residual " + brief(total.get_str()));
}

std::string_view to_string(SModKind kind) {
  switch (kind) {
    case SModKind::rec10:
      return "rec10";
    case SModKind::rec11:
      return "rec11";
    case SModKind::rec1:
      return "rec1";
  }
  return "?";
}

Integer s_combination(std::int64_t k) { return s_value(k + 2) + 12 * s_value(k + 1) + 16 * s_value(k); }

CheckReport s_mod_check(SModKind kind, std::int64_t n) {
  require(n >= 1, "s_mod_check: need n >= 1");
  const std::string id = "s_mod_" + std::string(to_string(kind));
  switch (kind) {
    case SModKind::rec10: {
      const Integer three = 3;
      const Integer a = s_value(3 * n);
      const Integer b = s_value(3 * n + 1);
      const Integer c = s_value(3 * n + 2);
      const bool ok = divides(three, a - b) && divides(three, b + c);
      return make_report(id, {{"n", n}}, ok,
                         "S_3n, S_3n+1, S_3n+2 = " + residue(a, three) + ", " + residue(b, three) + ", " +
                             residue(c, three));
    }
    case SModKind::rec11: {
      const Integer four = 4;
      const Integer a = s_value(4 * n + 2);
      return make_report(id, {{"n", n}}, divides(four, a), "S_4n+2 = " + residue(a, four));
    }
    case SModKind::rec1: {
      const Integer modulus = n;
      const Integer v = s_combination(n);
      return make_report(id, {{"n", n}}, divides(modulus, v), "combination = " + residue(v, modulus));
    }
  }
  throw OutOfDomain("s_mod_check: unknown kind");
}

Integer s_bridge_sum(std::int64_t m) {
  require(m >= 0, "s_bridge_sum: negative m");
  static ConcurrentMemo<std::int64_t, Integer> memo;
  return memo.get(m, [m] {
    Integer sum = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
      const Integer term = binom(2 * k, k) * binom(m, k) * binom(k, m - k);
      if (k % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  });
}

Integer binomial_weighted_s_sum(std::int64_t n) {
  Integer total = 0;
  for (std::int64_t m = 0; m < n; ++m)
    total += (binom(n, m + 1) + 12 * binom(n, m + 2) + 16 * binom(n, m + 3)) * s_value(m + 3);
  return total;
}

CheckReport rewrite_identity_check(std::int64_t n) {
  require(n >= 1, "rewrite_identity_check: need n >= 1");
  Params params{{"n", n}};
  for (std::int64_t m = 0; m < n; ++m) {
    if (s_bridge_sum(m) != s_value(m + 3))
      return make_report("rewrite_identity", std::move(params), false,
                         "inner sum at m = " + std::to_string(m) + " differs from S_{m+3}");
  }
  const Integer left = binomial_weighted_s_sum(n);
  Integer right = 0;
  for (std::int64_t m = 1; m <= n; ++m) right += binom(n, m) * s_combination(m);
  return make_report("rewrite_identity", std::move(params), left == right,
                     "left " + brief(left.get_str()) + " != right " + brief(right.get_str()),
                     "value " + brief(left.get_str()));
}

CheckReport multisum3_check(std::int64_t n) {
  require(n >= 1, "multisum3_check: need n >= 1");
  const Integer lhs = second_sum(n);
  const Integer rhs = binomial_weighted_s_sum(n);
  const Integer modulus = 2 * Integer(n) * n;
  return make_report("multisum3", {{"n", n}}, divides(modulus, lhs - rhs),
                     "difference = " + residue(lhs - rhs, modulus));
}

Integer conjecture_t(std::int64_t n) {
  require(n >= 1, "conjecture_t: need n >= 1");
  Integer total = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    Integer v = s_combination(k);
    const Integer kk = k;
    if (!divides(kk, v))
      throw NonIntegralTerm("term k = " + std::to_string(k) + " of T_n is not an integer");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), kk.get_mpz_t());
    if (k % 2 == 0)
      total += v;
    else
      total -= v;
  }
  return total;
}

CheckReport conj61_check(std::int64_t n) {
  require(n >= 1, "conj61_check: need n >= 1");
  const Integer t = conjecture_t(n);
  const Integer modulus = n;
  return as_finding(make_report("conj61", {{"n", n}}, divides(modulus, t), "T_n = " + residue(t, modulus),
                                "T_n " + brief(t.get_str())));
}

CheckReport conj61_prime_check(std::int64_t p) {
  require(p >= 3 && is_prime(p), "conj61_prime_check: need an odd prime");
  const Integer t = conjecture_t(p);
  const Integer modulus = Integer(p) * p;
  const Integer target = ((p + 1) / 2) % 2 == 0 ? Integer(2 * p) : Integer(-2 * p);
  return as_finding(make_report("conj61_prime", {{"p", p}}, divides(modulus, t - target),
                                "T_p = " + residue(t, modulus) + ", expected " + residue(target, modulus),
                                "T_p " + brief(t.get_str())));
}

}  // namespace sunpoly
