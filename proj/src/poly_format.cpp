#include "sunpoly/poly_format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace sunpoly {

namespace {

template <class R>
std::string univariate_text(const Poly<R>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const R& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const R magnitude = abs(c);
    if (i == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::size_t exponent() {
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    return std::stoul(d);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                ": " + what + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void add_term(std::vector<Rational>& acc, std::size_t exponent, const Rational& c) {
  if (acc.size() <= exponent) acc.resize(exponent + 1);
  acc[exponent] += c;
}

// Parses a signed sum of terms c, c*var^e, var^e.
std::vector<Rational> parse_terms(Cursor& cur, std::string_view var) {
  std::vector<Rational> acc;
  bool first = true;
  while (true) {
    bool negative = false;
    if (cur.accept('-')) {
      negative = true;
    } else if (!cur.accept('+') && !first) {
      break;
    }
    first = false;
    Rational coeff = 1;
    bool have_var = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      Integer num(cur.digits());
      Integer den = 1;
      if (cur.accept('/')) den = Integer(cur.digits());
      if (sgn(den) == 0) cur.fail("zero denominator");
      coeff = Rational(num, den);
      coeff.canonicalize();
      if (cur.accept('*')) {
        if (!cur.accept(var)) cur.fail("expected variable");
        have_var = true;
      }
    } else if (cur.accept(var)) {
      have_var = true;
    } else {
      cur.fail("expected term");
    }
    std::size_t e = 0;
    if (have_var) e = cur.accept('^') ? cur.exponent() : 1;
    add_term(acc, e, negative ? Rational(-coeff) : coeff);
    const char next = cur.peek();
    if (next != '+' && next != '-') break;
  }
  return acc;
}

IntPoly integral(const std::vector<Rational>& coeffs) {
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.get_den() != 1) throw std::invalid_argument("non-integer coefficient " + c.get_str());
    out.push_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

}  // namespace

std::string to_text(const Integer& v) { return v.get_str(); }
std::string to_text(const Rational& v) { return v.get_str(); }
std::string to_text(const IntPoly& p, std::string_view var) { return univariate_text(p, var); }
std::string to_text(const RatPoly& p, std::string_view var) { return univariate_text(p, var); }

std::string to_text(const XQPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.coeff(i).is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << to_text(p.coeff(i), "x") << ')';
    if (i == 1) out << "*q";
    if (i > 1) out << "*q^" << i;
  }
  return out.str();
}

RatPoly parse_rat_poly(std::string_view text, std::string_view var) {
  Cursor cur(text);
  auto coeffs = parse_terms(cur, var);
  if (!cur.done()) cur.fail("trailing input");
  return RatPoly(std::move(coeffs));
}

IntPoly parse_int_poly(std::string_view text, std::string_view var) {
  Cursor cur(text);
  auto coeffs = parse_terms(cur, var);
  if (!cur.done()) cur.fail("trailing input");
  return integral(coeffs);
}

XQPoly parse_xq_poly(std::string_view text) {
  Cursor cur(text);
  if (cur.accept('0') && cur.done()) return XQPoly();
  Cursor fresh(text);
  std::vector<IntPoly> acc;
  do {
    fresh.expect('(');
    IntPoly inner = integral(parse_terms(fresh, "x"));
    fresh.expect(')');
    std::size_t e = 0;
    if (fresh.accept('*')) {
      if (!fresh.accept('q')) fresh.fail("expected q");
      e = fresh.accept('^') ? fresh.exponent() : 1;
    }
    if (acc.size() <= e) acc.resize(e + 1);
    acc[e] += inner;
  } while (fresh.accept('+'));
  if (!fresh.done()) fresh.fail("trailing input");
  return XQPoly(std::move(acc));
}

}  // namespace sunpoly
