#include "sunpoly/qfamilies.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "sunpoly/comb.hpp"
#include "sunpoly/families.hpp"
#include "sunpoly/memo.hpp"
#include "sunpoly/qcore.hpp"

namespace sunpoly {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw OutOfDomain(what);
}

// Fixed-size accumulator; callers size it from a degree bound up front.
class Accumulator {
 public:
  explicit Accumulator(std::size_t length) : coeffs_(length) {}

  void add(const IntPoly& p, std::size_t shift) {
    if (p.is_zero()) return;
    if (shift + p.size() > coeffs_.size()) coeffs_.resize(shift + p.size());
    for (std::size_t i = 0; i < p.size(); ++i) coeffs_[shift + i] += p.coeff(i);
  }

  IntPoly take() { return IntPoly(std::move(coeffs_)); }

 private:
  std::vector<Integer> coeffs_;
};

std::size_t term_degree(std::int64_t k, std::int64_t j) {
  return static_cast<std::size_t>(2 * j * (k - j) + j * j);
}

const IntPoly& binomial_pair(std::int64_t k, std::int64_t j) {
  static ConcurrentMemo<std::pair<std::int64_t, std::int64_t>, IntPoly> memo;
  return memo.get({k, j}, [k, j] { return q_binom(k, j) * q_binom(k + 1, j + 1); });
}

std::vector<IntPoly> oddcong_slices(std::int64_t n) {
  const IntPoly one_plus_q_squared{Integer(1), Integer(2), Integer(1)};
  std::vector<IntPoly> weights;
  for (std::int64_t k = 0; k < n; ++k)
    weights.push_back(one_plus_q_squared * q_int(k + 1).inflated(2) - IntPoly::constant(1));

  std::vector<IntPoly> slices;
  for (std::int64_t j = 0; j < n; ++j) {
    std::size_t bound = 0;
    for (std::int64_t k = j; k < n; ++k)
      bound = std::max(bound, static_cast<std::size_t>(4 * k + 3) + 2 * term_degree(k, j));
    Accumulator acc(bound + 1);
    for (std::int64_t k = j; k < n; ++k)
      acc.add(weights[static_cast<std::size_t>(k)] * g_q_term(k, j).inflated(2), static_cast<std::size_t>(2 * k));
    slices.push_back(acc.take());
  }
  return slices;
}

std::vector<IntPoly> evencong1_slices(std::int64_t n) {
  std::vector<IntPoly> slices;
  for (std::int64_t j = 0; j < n; ++j) {
    Accumulator acc(static_cast<std::size_t>(n) + term_degree(n - 1, j));
    for (std::int64_t k = j; k < n; ++k) acc.add(g_q_term(k, j), static_cast<std::size_t>(k));
    slices.push_back(acc.take());
  }
  return slices;
}

std::vector<IntPoly> evencong2_slices(std::int64_t n) {
  std::vector<IntPoly> slices;
  for (std::int64_t j = 0; j < n; ++j) {
    Accumulator acc(static_cast<std::size_t>(n + 1 + (n - 1 - j) * (2 * j + 1)));
    for (std::int64_t k = j; k < n; ++k) acc.add(binomial_pair(k, j), static_cast<std::size_t>(k));
    const IntPoly inner = acc.take();
    slices.push_back(q_int(j + 1).inflated(2) * q_binom(2 * j, j) * inner);
  }
  return slices;
}

}  // namespace

std::string_view to_string(Thm5Congruence c) {
  switch (c) {
    case Thm5Congruence::oddcong:
      return "oddcong";
    case Thm5Congruence::evencong1:
      return "evencong1";
    case Thm5Congruence::evencong2:
      return "evencong2";
  }
  return "?";
}

const IntPoly& g_q_term(std::int64_t n, std::int64_t j) {
  static ConcurrentMemo<std::pair<std::int64_t, std::int64_t>, IntPoly> memo;
  return memo.get({n, j}, [n, j] {
    const IntPoly b = q_binom(n, j);
    return b * b * q_binom(2 * j, j);
  });
}

std::vector<IntPoly> g_q_slices(std::int64_t n, bool squared) {
  require(n >= 0, "g_q: negative n");
  std::vector<IntPoly> slices;
  slices.reserve(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j)
    slices.push_back(squared ? g_q_term(n, j).inflated(2) : g_q_term(n, j));
  return slices;
}

XQPoly g_q(std::int64_t n, bool squared) {
  const auto slices = g_q_slices(n, squared);
  return from_x_slices(slices);
}

IntPoly modulus(std::int64_t n, ModulusClass cls) {
  require(n >= 1, "modulus: need n >= 1");
  IntPoly m = IntPoly::constant(1);
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const bool in_class = cls == ModulusClass::odd_gt1 ? d % 2 == 1
                          : cls == ModulusClass::even  ? d % 2 == 0
                                                       : d % 2 == 0 && d > 2;
    if (in_class) m = m * cyclotomic(d);
  }
  return m;
}

std::vector<IntPoly> thm5_slices(Thm5Congruence which, std::int64_t n) {
  require(n >= 1, "thm5: need n >= 1");
  switch (which) {
    case Thm5Congruence::oddcong:
      return oddcong_slices(n);
    case Thm5Congruence::evencong1:
      return evencong1_slices(n);
    case Thm5Congruence::evencong2:
      return evencong2_slices(n);
  }
  return {};
}

CheckReport thm5_check(Thm5Congruence which, std::int64_t n) {
  require(n >= 1, "thm5_check: need n >= 1");
  const ModulusClass cls = which == Thm5Congruence::oddcong     ? ModulusClass::odd_gt1
                           : which == Thm5Congruence::evencong1 ? ModulusClass::even
                                                                : ModulusClass::even_gt2;
  const IntPoly m = modulus(n, cls);
  const auto slices = thm5_slices(which, n);
  const std::string id = "thm5_" + std::string(to_string(which));
  for (std::size_t j = 0; j < slices.size(); ++j) {
    if (!divrem(slices[j], m).remainder.is_zero())
      return make_report(id, {{"n", n}}, false,
                         "x^" + std::to_string(j) + " slice not divisible by the modulus of degree " +
                             std::to_string(m.degree()));
  }
  return make_report(id, {{"n", n}}, true, {}, "modulus degree " + std::to_string(m.degree()));
}

Integer phi_at_one(std::int64_t d) {
  require(d >= 2, "phi_at_one: need d >= 2");
  std::int64_t p = 2;
  while (d % p != 0) ++p;
  std::int64_t rest = d;
  while (rest % p == 0) rest /= p;
  return rest == 1 ? Integer(p) : Integer(1);
}

CheckReport q1_specialization_check(std::int64_t n) {
  require(n >= 1, "q1_specialization_check: need n >= 1");
  std::int64_t r = 0;
  std::int64_t n1 = n;
  while (n1 % 2 == 0) {
    n1 /= 2;
    ++r;
  }
  const Integer odd_part = n1;
  const Integer two_power = Integer(1) << static_cast<mp_bitcnt_t>(r);

  IntPoly linear;
  IntPoly plain;
  IntPoly k_weighted;
  for (std::int64_t k = 0; k < n; ++k) {
    const IntPoly& g = sun_poly(k);
    linear.add_scaled(g, Integer(4 * k + 3));
    plain += g;
    k_weighted.add_scaled(g, Integer(2 * k));
  }
  const IntPoly difference = k_weighted - plain;

  Params params{{"n", n}};
  if (!poly_int_divisible(linear, odd_part))
    return make_report("q1_specialization", std::move(params), false, "sum (4k+3) g_k not divisible by n1");
  if (!poly_int_divisible(plain, two_power))
    return make_report("q1_specialization", std::move(params), false, "sum g_k not divisible by 2^r");
  if (!poly_int_divisible(difference, two_power))
    return make_report("q1_specialization", std::move(params), false,
                       "2 sum k g_k - sum g_k not divisible by 2^r");

  Integer odd_product = 1;
  Integer even_product = 1;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d != 0) continue;
    const Integer value = phi_at_one(d);
    if (value != evaluate(cyclotomic(d), Integer(1)))
      return make_report("q1_specialization", std::move(params), false,
                         "Phi_" + std::to_string(d) + "(1) disagrees with the prime-power rule");
    (d % 2 == 0 ? even_product : odd_product) *= value;
  }
  return make_report("q1_specialization", std::move(params), odd_product == odd_part && even_product == two_power,
                     "odd Phi_d(1) product " + odd_product.get_str() + ", even product " + even_product.get_str(),
                     "n1 " + odd_part.get_str() + ", 2^r " + two_power.get_str());
}

}  // namespace sunpoly
