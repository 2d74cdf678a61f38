#ifndef CIRCDLP_FIELD_HPP
#define CIRCDLP_FIELD_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "circdlp/bytes.hpp"
#include "circdlp/errors.hpp"
#include "circdlp/opcount.hpp"
#include "circdlp/rng.hpp"

namespace circdlp {

class FieldElement;

/// Description of a finite field F_q, q = p^k, in polynomial basis over F_p.
///
/// Two families are supported: characteristic 2 with 1 <= k <= 64
/// (coefficient vectors packed one bit per coefficient into a machine word)
/// and odd prime p < 2^31 with k = 1. FieldSpec is an immutable value;
/// copies compare equal structurally, so independently constructed specs of
/// the same field interoperate.
class FieldSpec {
 public:
  /// F_{2^k} with the built-in lowest-weight irreducible modulus.
  static FieldSpec binary(unsigned k);

  /// F_{2^k} with a caller-supplied modulus. `modulus_low` holds coefficients
  /// 0..k-1 (bit i = coefficient of x^i); the monic x^k term is implicit.
  /// The caller is responsible for irreducibility.
  static FieldSpec binary(unsigned k, std::uint64_t modulus_low);

  /// Prime field F_p. p = 2 is accepted and equals binary(1).
  static FieldSpec prime(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  unsigned k() const { return k_; }
  bool is_char2() const { return p_ == 2; }
  bool is_gf2() const { return p_ == 2 && k_ == 1; }

  /// q - 1 (representable for every supported field, including q = 2^64).
  std::uint64_t q_minus_one() const {
    if (p_ == 2) return k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
    return p_ - 1;
  }

  /// Number of bytes in the canonical serialization of one element.
  unsigned element_bytes() const;

  /// Low coefficients of the reduction polynomial (char-2, k > 1 only).
  std::uint64_t modulus_low() const { return mod_low_; }

  /// Modulus as a coefficient list, constant term first, k+1 entries.
  /// Empty for k = 1 fields, which never reduce.
  std::vector<std::uint64_t> modulus_coefficients() const;

  /// Hex rendering of the modulus bit string including the monic term
  /// ("" for k = 1).
  std::string modulus_hex() const;
  static std::uint64_t modulus_low_from_hex(unsigned k, const std::string& hex);

  FieldElement zero() const;
  FieldElement one() const;
  /// Element from a raw value; reduces to canonical form (mod p for k = 1,
  /// polynomial reduction for char-2 values with bits at or above x^k).
  FieldElement element(std::uint64_t value) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(std::uint64_t p, unsigned k, std::uint64_t mod_low)
      : p_(p), k_(k), mod_low_(mod_low) {}

  std::uint64_t p_ = 2;
  std::uint32_t k_ = 1;
  std::uint64_t mod_low_ = 0;
};

namespace detail {

/// Carry-less 64x64 -> 128 bit multiply.
inline unsigned __int128 clmul64(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 acc = 0;
  while (a) {
    int i = std::countr_zero(a);
    acc ^= static_cast<unsigned __int128>(b) << i;
    a &= a - 1;
  }
  return acc;
}

inline int top_bit_u128(unsigned __int128 t) {
  std::uint64_t hi = static_cast<std::uint64_t>(t >> 64);
  if (hi) return 127 - std::countl_zero(hi);
  std::uint64_t lo = static_cast<std::uint64_t>(t);
  if (lo) return 63 - std::countl_zero(lo);
  return -1;
}

/// Reduce a polynomial of degree < 2k-1 modulo x^k + mod_low.
inline std::uint64_t gf2_reduce(unsigned __int128 t, unsigned k, std::uint64_t mod_low) {
  int top;
  while ((top = top_bit_u128(t)) >= static_cast<int>(k)) {
    unsigned s = static_cast<unsigned>(top) - k;
    t ^= static_cast<unsigned __int128>(mod_low) << s;
    t ^= static_cast<unsigned __int128>(1) << top;
  }
  return static_cast<std::uint64_t>(t);
}

/// Bits of v spread to even positions: bit i -> bit 2i.
inline unsigned __int128 gf2_spread(std::uint64_t v) {
  auto spread16 = [](std::uint64_t x) {
    // 16 -> 32 bit interleave with zeros
    x = (x | x << 8) & 0x00ff00ffull;
    x = (x | x << 4) & 0x0f0f0f0full;
    x = (x | x << 2) & 0x33333333ull;
    x = (x | x << 1) & 0x55555555ull;
    return x;
  };
  unsigned __int128 out = 0;
  for (int chunk = 0; chunk < 4; ++chunk) {
    std::uint64_t part = (v >> (16 * chunk)) & 0xffff;
    if (part) out ^= static_cast<unsigned __int128>(spread16(part)) << (32 * chunk);
  }
  return out;
}

std::uint64_t gf2_inverse(std::uint64_t v, unsigned k, std::uint64_t mod_low);
std::uint64_t prime_inverse(std::uint64_t v, std::uint64_t p);

}  // namespace detail

/// An element of F_q in canonical form. For char-2 fields the value packs the
/// coefficient vector one bit per coefficient (bit i = coefficient of x^i);
/// for prime fields it is the residue in [0, p). Elements are immutable plain
/// data and carry their FieldSpec; mixing specs in arithmetic throws
/// FieldMismatchError.
class FieldElement {
 public:
  FieldElement() : spec_(FieldSpec::binary(1)), v_(0) {}
  FieldElement(const FieldSpec& spec, std::uint64_t canonical_value)
      : spec_(spec), v_(canonical_value) {}

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Coefficient vector, constant term first, k entries.
  std::vector<std::uint64_t> coefficients() const {
    std::vector<std::uint64_t> out;
    if (spec_.is_char2()) {
      out.reserve(spec_.k());
      for (unsigned i = 0; i < spec_.k(); ++i) out.push_back(v_ >> i & 1);
    } else {
      out.push_back(v_);
    }
    return out;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.require_same_spec(b, "add");
    detail::tick_field_add();
    if (a.spec_.is_char2()) return {a.spec_, a.v_ ^ b.v_};
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.spec_.p()) s -= a.spec_.p();
    return {a.spec_, s};
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.require_same_spec(b, "subtract");
    detail::tick_field_add();
    if (a.spec_.is_char2()) return {a.spec_, a.v_ ^ b.v_};
    std::uint64_t s = a.v_ + a.spec_.p() - b.v_;
    if (s >= a.spec_.p()) s -= a.spec_.p();
    return {a.spec_, s};
  }

  FieldElement neg() const {
    if (spec_.is_char2() || v_ == 0) return *this;
    return {spec_, spec_.p() - v_};
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.require_same_spec(b, "multiply");
    detail::tick_field_mult();
    return {a.spec_, mul_value(a.spec_, a.v_, b.v_)};
  }

  /// a^2. For characteristic 2 this is coefficient-wise squaring followed by
  /// reduction (the Frobenius map) and never goes through a general
  /// multiplication; for odd characteristic it performs the same arithmetic
  /// as a general product but is tallied as a squaring.
  FieldElement square() const {
    detail::tick_field_square();
    if (spec_.is_char2())
      return {spec_, detail::gf2_reduce(detail::gf2_spread(v_), spec_.k(), spec_.modulus_low())};
    return {spec_, numth_mul_(v_, v_, spec_.p())};
  }

  FieldElement inverse() const {
    if (v_ == 0) throw DivisionByZeroError("inverse of zero field element");
    if (spec_.is_char2())
      return {spec_, detail::gf2_inverse(v_, spec_.k(), spec_.modulus_low())};
    return {spec_, detail::prime_inverse(v_, spec_.p())};
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
  }

  /// a^e by left-to-right square-and-multiply; squaring steps go through
  /// square(). 0^0 = 1.
  FieldElement pow(std::uint64_t e) const {
    FieldElement acc = spec_.one();
    if (e == 0) return acc;
    int top = 63 - std::countl_zero(e);
    acc = *this;
    for (int i = top - 1; i >= 0; --i) {
      acc = acc.square();
      if (e >> i & 1) acc = acc * *this;
    }
    return acc;
  }

  bool operator==(const FieldElement&) const = default;

  /// Canonical big-endian serialization, element_bytes() long.
  Bytes to_bytes() const {
    Bytes out;
    append_be(out, v_, spec_.element_bytes());
    return out;
  }

  static FieldElement from_bytes(const FieldSpec& spec, const Bytes& in, std::size_t& pos) {
    std::uint64_t v = read_be(in, pos, spec.element_bytes());
    if (spec.is_char2()) {
      if (spec.k() < 64 && v >> spec.k())
        throw ParseError("field element exceeds field size");
    } else if (v >= spec.p()) {
      throw ParseError("field element exceeds field size");
    }
    return {spec, v};
  }

 private:
  static std::uint64_t numth_mul_(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;  // p < 2^31, no overflow
  }

  static std::uint64_t mul_value(const FieldSpec& spec, std::uint64_t a, std::uint64_t b) {
    if (spec.is_char2())
      return detail::gf2_reduce(detail::clmul64(a, b), spec.k(), spec.modulus_low());
    return numth_mul_(a, b, spec.p());
  }

  void require_same_spec(const FieldElement& other, const char* op) const {
    if (spec_ != other.spec_)
      throw FieldMismatchError(std::string("cannot ") + op +
                               " elements of different fields");
  }

  FieldSpec spec_;
  std::uint64_t v_;
};

inline FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
inline FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

inline FieldElement FieldSpec::element(std::uint64_t value) const {
  if (is_char2()) {
    if (k_ < 64 && (value >> k_))
      value = detail::gf2_reduce(value, k_, mod_low_);
    return FieldElement(*this, value);
  }
  return FieldElement(*this, value % p_);
}

/// Uniform random element of the field.
inline FieldElement random_element(const FieldSpec& spec, Rng& rng) {
  if (spec.is_char2()) return FieldElement(spec, rng.bits_u64(spec.k()));
  return FieldElement(spec, rng.below(spec.p()));
}

/// Uniform random nonzero element.
inline FieldElement random_nonzero(const FieldSpec& spec, Rng& rng) {
  for (;;) {
    FieldElement e = random_element(spec, rng);
    if (!e.is_zero()) return e;
  }
}

}  // namespace circdlp

#endif  // CIRCDLP_FIELD_HPP
