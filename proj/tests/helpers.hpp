#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sunpoly/ring.hpp"

namespace test_support {

inline sunpoly::IntPoly from_ints(std::initializer_list<long> coeffs) {
  std::vector<sunpoly::Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return sunpoly::IntPoly(std::move(v));
}

inline sunpoly::IntPoly random_poly(std::mt19937_64& rng, std::size_t max_len, long bound) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<sunpoly::Integer> v(len(rng));
  for (auto& c : v) c = coeff(rng);
  return sunpoly::IntPoly(std::move(v));
}

// Coefficients with up to `limbs` 64-bit limbs, random sign.
inline sunpoly::IntPoly random_big_poly(std::mt19937_64& rng, std::size_t len, int limbs) {
  std::vector<sunpoly::Integer> v(len);
  for (auto& c : v) {
    c = 0;
    for (int i = 0; i < limbs; ++i) {
      c <<= 64;
      c += sunpoly::Integer(std::to_string(rng()));
    }
    if (rng() & 1U) c = -c;
  }
  return sunpoly::IntPoly(std::move(v));
}

}  // namespace test_support
