#pragma once

// Canonical text format: ascending powers, explicit `*` and `^`, spaces
// around `+` and `-`, e.g. "1 - q + 2*q^2". Bivariate values print q-outer
// with parenthesized x-coefficients: "(1 + x) + (x)*q".

#include <string>
#include <string_view>

#include "sunpoly/ring.hpp"

namespace sunpoly {

std::string to_text(const Integer& v);
std::string to_text(const Rational& v);
std::string to_text(const IntPoly& p, std::string_view var = "x");
std::string to_text(const RatPoly& p, std::string_view var = "x");
std::string to_text(const XQPoly& p);

/// Parsers for the canonical format; throw std::invalid_argument on
/// malformed input. Term order and spacing are not enforced.
IntPoly parse_int_poly(std::string_view text, std::string_view var = "x");
RatPoly parse_rat_poly(std::string_view text, std::string_view var = "x");
XQPoly parse_xq_poly(std::string_view text);

}  // namespace sunpoly
