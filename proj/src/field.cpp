#include "circdlp/field.hpp"

#include <array>

#include "circdlp/numth.hpp"

namespace circdlp {

namespace {

// Lowest-weight irreducible polynomials over F_2 for degrees 1..64: the first
// irreducible trinomial x^k + x^a + 1 in ascending a, else the first
// pentanomial x^k + x^c + x^b + x^a + 1 in ascending (c, b, a). Stored as the
// exponents of the middle terms; the x^k and 1 terms are implicit.
constexpr std::array<std::array<std::uint8_t, 3>, 65> kMiddleTerms = {{
    {0, 0, 0},   // k=0 unused
    {0, 0, 0},   // k=1: F_2 itself, no reduction
    {1, 0, 0},   {1, 0, 0},   {1, 0, 0},   {2, 0, 0},   {1, 0, 0},
    {1, 0, 0},   {4, 3, 1},   {1, 0, 0},   {3, 0, 0},   {2, 0, 0},
    {3, 0, 0},   {4, 3, 1},   {5, 0, 0},   {1, 0, 0},   {5, 3, 1},
    {3, 0, 0},   {3, 0, 0},   {5, 2, 1},   {3, 0, 0},   {2, 0, 0},
    {1, 0, 0},   {5, 0, 0},   {4, 3, 1},   {3, 0, 0},   {4, 3, 1},
    {5, 2, 1},   {1, 0, 0},   {2, 0, 0},   {1, 0, 0},   {3, 0, 0},
    {7, 3, 2},   {10, 0, 0},  {7, 0, 0},   {2, 0, 0},   {9, 0, 0},
    {6, 4, 1},   {6, 5, 1},   {4, 0, 0},   {5, 4, 3},   {3, 0, 0},
    {7, 0, 0},   {6, 4, 3},   {5, 0, 0},   {4, 3, 1},   {1, 0, 0},
    {5, 0, 0},   {5, 3, 2},   {9, 0, 0},   {4, 3, 2},   {6, 3, 1},
    {3, 0, 0},   {6, 2, 1},   {9, 0, 0},   {7, 0, 0},   {7, 4, 2},
    {4, 0, 0},   {19, 0, 0},  {7, 4, 2},   {1, 0, 0},   {5, 2, 1},
    {29, 0, 0},  {1, 0, 0},   {4, 3, 1},
}};

std::uint64_t builtin_modulus_low(unsigned k) {
  const auto& t = kMiddleTerms[k];
  std::uint64_t m = 1;  // constant term
  for (std::uint8_t e : t)
    if (e) m |= std::uint64_t{1} << e;
  return m;
}

}  // namespace

FieldSpec FieldSpec::binary(unsigned k) {
  if (k < 1 || k > 64)
    throw Error("binary field degree must be in [1, 64], got " + std::to_string(k));
  return FieldSpec(2, k, k == 1 ? 0 : builtin_modulus_low(k));
}

FieldSpec FieldSpec::binary(unsigned k, std::uint64_t modulus_low) {
  if (k < 2 || k > 64)
    throw Error("binary field degree with explicit modulus must be in [2, 64]");
  if (k < 64 && (modulus_low >> k))
    throw Error("modulus low bits exceed degree");
  if ((modulus_low & 1) == 0)
    throw Error("modulus must have a nonzero constant term");
  return FieldSpec(2, k, modulus_low);
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p == 2) return binary(1);
  if (p >= (std::uint64_t{1} << 31))
    throw Error("prime field characteristic must be below 2^31");
  if (!numth::is_prime_u64(p))
    throw Error(std::to_string(p) + " is not prime");
  return FieldSpec(p, 1, 0);
}

unsigned FieldSpec::element_bytes() const {
  if (p_ == 2) return (k_ + 7) / 8;
  unsigned bits = 64 - std::countl_zero(p_);  // residues need bitlen(p-1) = bitlen(p) bits
  return (bits + 7) / 8;
}

std::vector<std::uint64_t> FieldSpec::modulus_coefficients() const {
  if (k_ == 1) return {};
  std::vector<std::uint64_t> out(k_ + 1, 0);
  for (unsigned i = 0; i < k_; ++i) out[i] = mod_low_ >> i & 1;
  out[k_] = 1;
  return out;
}

std::string FieldSpec::modulus_hex() const {
  if (k_ == 1) return "";
  // Bit string of the full modulus including the monic x^k term, rendered as
  // a big-endian hex integer.
  unsigned nibbles = (k_ + 1 + 3) / 4;
  std::string out;
  static const char* digits = "0123456789abcdef";
  bool started = false;
  for (unsigned n = nibbles; n-- > 0;) {
    unsigned nib = 0;
    for (unsigned b = 0; b < 4; ++b) {
      unsigned bit = n * 4 + b;
      std::uint64_t v = bit == k_ ? 1 : (bit < k_ ? (mod_low_ >> bit & 1) : 0);
      nib |= static_cast<unsigned>(v) << b;
    }
    if (!started && nib == 0) continue;
    started = true;
    out.push_back(digits[nib]);
  }
  return out;
}

std::uint64_t FieldSpec::modulus_low_from_hex(unsigned k, const std::string& hex) {
  if (k < 2 || k > 64) throw ParseError("modulus hex only applies to k in [2, 64]");
  std::uint64_t low = 0;
  bool monic_seen = false;
  unsigned bit_pos = 0;
  // Least-significant nibble is the last character.
  for (std::size_t i = hex.size(); i-- > 0;) {
    int nib = hex_nibble(hex[i]);
    if (nib < 0) throw ParseError("invalid modulus hex");
    for (unsigned b = 0; b < 4; ++b, ++bit_pos) {
      if (!((nib >> b) & 1)) continue;
      if (bit_pos < k)
        low |= std::uint64_t{1} << bit_pos;
      else if (bit_pos == k)
        monic_seen = true;
      else
        throw ParseError("modulus degree exceeds field degree");
    }
  }
  if (!monic_seen) throw ParseError("modulus is not monic of the stated degree");
  return low;
}

namespace detail {

std::uint64_t gf2_inverse(std::uint64_t v, unsigned k, std::uint64_t mod_low) {
  // Extended Euclid on binary polynomials (v, modulus). The full modulus
  // occupies k+1 bits so intermediates live in 128-bit words.
  using u128 = unsigned __int128;
  u128 u = v;
  u128 m = (static_cast<u128>(1) << k) ^ mod_low;
  u128 g1 = 1, g2 = 0;
  while (top_bit_u128(u) > 0) {
    int j = top_bit_u128(u) - top_bit_u128(m);
    if (j < 0) {
      std::swap(u, m);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= m << j;
    g1 ^= g2 << j;
  }
  if (u == 0) throw DivisionByZeroError("element shares a factor with the modulus");
  return gf2_reduce(g1, k, mod_low);
}

std::uint64_t prime_inverse(std::uint64_t v, std::uint64_t p) {
  // Extended Euclid on integers.
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(v);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DivisionByZeroError("element is not invertible modulo p");
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
               : static_cast<std::uint64_t>(t);
}

}  // namespace detail

}  // namespace circdlp
