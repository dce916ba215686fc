#include "sunpoly/ring.hpp"

#include <bit>
#include <cstring>

namespace sunpoly {

namespace {

// Below this operand length the schoolbook product beats packing.
constexpr std::size_t kKroneckerCutoff = 12;

class Mpz {
 public:
  Mpz() { mpz_init(v_); }
  ~Mpz() { mpz_clear(v_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_ptr get() { return v_; }

 private:
  mpz_t v_;
};

std::size_t max_bits(std::span<const Integer> coeffs) {
  std::size_t bits = 0;
  for (const auto& c : coeffs) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

// Writes sum_i coeffs[i] * 2^(64 * slot_limbs * i) into out.
void pack(std::span<const Integer> coeffs, std::size_t slot_limbs, mpz_ptr out) {
  const std::size_t total = coeffs.size() * slot_limbs;
  Mpz pos;
  Mpz neg;
  mp_limb_t* pp = mpz_limbs_write(pos.get(), static_cast<mp_size_t>(total));
  mp_limb_t* np = mpz_limbs_write(neg.get(), static_cast<mp_size_t>(total));
  std::memset(pp, 0, total * sizeof(mp_limb_t));
  std::memset(np, 0, total * sizeof(mp_limb_t));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    mpz_srcptr c = coeffs[i].get_mpz_t();
    const int s = mpz_sgn(c);
    if (s == 0) continue;
    const std::size_t n = mpz_size(c);
    std::memcpy((s > 0 ? pp : np) + i * slot_limbs, mpz_limbs_read(c), n * sizeof(mp_limb_t));
  }
  mpz_limbs_finish(pos.get(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get(), static_cast<mp_size_t>(total));
  mpz_sub(out, pos.get(), neg.get());
}

// Inverse of pack for a value whose slots hold balanced digits in
// (-2^(B-1), 2^(B-1)), B = 64 * slot_limbs.
std::vector<Integer> unpack(mpz_srcptr value, std::size_t count, std::size_t slot_limbs) {
  std::vector<Integer> out(count);
  const int sign = mpz_sgn(value);
  if (sign == 0) return out;
  const mp_limb_t* src = mpz_limbs_read(value);
  const std::size_t n = mpz_size(value);
  const std::size_t bits = 64 * slot_limbs;

  Mpz half;
  Mpz full;
  mpz_setbit(half.get(), bits - 1);
  mpz_setbit(full.get(), bits);

  bool carry = false;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_ptr digit = out[i].get_mpz_t();
    const std::size_t begin = i * slot_limbs;
    if (begin < n) {
      const std::size_t len = std::min(slot_limbs, n - begin);
      mp_limb_t* dst = mpz_limbs_write(digit, static_cast<mp_size_t>(len));
      std::memcpy(dst, src + begin, len * sizeof(mp_limb_t));
      mpz_limbs_finish(digit, static_cast<mp_size_t>(len));
    }
    if (carry) mpz_add_ui(digit, digit, 1);
    carry = mpz_cmp(digit, half.get()) >= 0;
    if (carry) mpz_sub(digit, digit, full.get());
    if (sign < 0) mpz_neg(digit, digit);
  }
  return out;
}

IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b) {
  const std::size_t min_len = std::min(a.size(), b.size());
  const std::size_t bits = max_bits(a.coeffs()) + max_bits(b.coeffs()) +
                           static_cast<std::size_t>(std::bit_width(min_len)) + 1;
  const std::size_t slot_limbs = (bits + 63) / 64;

  Mpz pa;
  Mpz product;
  pack(a.coeffs(), slot_limbs, pa.get());
  if (&a == &b) {
    mpz_mul(product.get(), pa.get(), pa.get());
  } else {
    Mpz pb;
    pack(b.coeffs(), slot_limbs, pb.get());
    mpz_mul(product.get(), pa.get(), pb.get());
  }
  return IntPoly(unpack(product.get(), a.size() + b.size() - 1, slot_limbs));
}

}  // namespace

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_srcptr ai = a.coeff(i).get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), ai, b.coeff(j).get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  if (std::min(a.size(), b.size()) < kKroneckerCutoff) return multiply_schoolbook(a, b);
  return multiply_kronecker(a, b);
}

bool poly_int_divisible(const IntPoly& p, const Integer& n) {
  if (sgn(n) == 0) throw std::invalid_argument("poly_int_divisible: modulus must be nonzero");
  for (const auto& c : p.coeffs())
    if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t())) return false;
  return true;
}

IntPoly divide_coefficients(const IntPoly& p, const Integer& n) {
  if (!poly_int_divisible(p, n)) throw InexactDivision("coefficient not divisible");
  std::vector<Integer> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  return IntPoly(std::move(out));
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return RatPoly(std::move(out));
}

std::vector<IntPoly> x_slices(const XQPoly& p) {
  std::size_t xdeg = 0;
  for (const auto& c : p.coeffs()) xdeg = std::max(xdeg, c.size());
  std::vector<std::vector<Integer>> raw(xdeg, std::vector<Integer>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const IntPoly& c = p.coeff(i);
    for (std::size_t j = 0; j < c.size(); ++j) raw[j][i] = c.coeff(j);
  }
  std::vector<IntPoly> out;
  out.reserve(xdeg);
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

XQPoly from_x_slices(std::span<const IntPoly> slices) {
  std::size_t qlen = 0;
  for (const auto& s : slices) qlen = std::max(qlen, s.size());
  std::vector<std::vector<Integer>> raw(qlen, std::vector<Integer>(slices.size()));
  for (std::size_t j = 0; j < slices.size(); ++j)
    for (std::size_t i = 0; i < slices[j].size(); ++i) raw[i][j] = slices[j].coeff(i);
  std::vector<IntPoly> out;
  out.reserve(qlen);
  for (auto& r : raw) out.emplace_back(std::move(r));
  return XQPoly(std::move(out));
}

IntPoly specialize_q(const XQPoly& p, const Integer& value) {
  return evaluate(p, IntPoly::constant(value));
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (sgn(m) == 0) throw DivisionByZero("mod_floor: zero modulus");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool divides(const Integer& m, const Integer& a) {
  if (sgn(m) == 0) return sgn(a) == 0;
  return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t()) != 0;
}

}  // namespace sunpoly
