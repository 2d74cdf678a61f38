#ifndef CIRCDLP_BIGINT_HPP
#define CIRCDLP_BIGINT_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "circdlp/errors.hpp"
#include "circdlp/rng.hpp"

namespace circdlp {

/// Arbitrary-width unsigned integer used for exponents.
///
/// Exponentiation only needs bit access, comparison, hex I/O and reduction by
/// a machine-word modulus, so that is all this type provides.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) {
    if (v) limbs_.push_back(v);
  }

  static BigUint from_hex(const std::string& hex) {
    BigUint out;
    if (hex.empty()) throw ParseError("empty hex integer");
    for (char c : hex) {
      int nib = hex_nibble_(c);
      if (nib < 0) throw ParseError("invalid hex digit in integer \"" + hex + "\"");
      out.shl4_();
      if (!out.limbs_.empty())
        out.limbs_[0] |= static_cast<std::uint64_t>(nib);
      else if (nib)
        out.limbs_.push_back(static_cast<std::uint64_t>(nib));
    }
    return out;
  }

  std::string to_hex() const {
    if (is_zero()) return "0";
    static const char* digits = "0123456789abcdef";
    std::string out;
    bool started = false;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      for (int shift = 60; shift >= 0; shift -= 4) {
        int nib = static_cast<int>(limbs_[i] >> shift & 0xf);
        if (!started && nib == 0) continue;
        started = true;
        out.push_back(digits[nib]);
      }
    }
    return out;
  }

  /// Uniform value in [0, 2^bits).
  static BigUint random_bits(Rng& rng, unsigned bits) {
    BigUint out;
    unsigned words = bits / 64, rem = bits % 64;
    out.limbs_.resize(words + (rem ? 1 : 0));
    for (unsigned i = 0; i < words; ++i) out.limbs_[i] = rng.word();
    if (rem) out.limbs_[words] = rng.bits_u64(rem);
    out.trim_();
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }

  unsigned bit_length() const {
    if (limbs_.empty()) return 0;
    return static_cast<unsigned>(64 * (limbs_.size() - 1) +
                                 (64 - std::countl_zero(limbs_.back())));
  }

  bool bit(unsigned i) const {
    std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1;
  }

  unsigned popcount() const {
    unsigned n = 0;
    for (std::uint64_t w : limbs_) n += static_cast<unsigned>(std::popcount(w));
    return n;
  }

  std::uint64_t mod_u64(std::uint64_t m) const {
    if (m == 0) throw DivisionByZeroError("reduction modulo zero");
    unsigned __int128 r = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
      r = ((r << 64) | limbs_[i]) % m;
    return static_cast<std::uint64_t>(r);
  }

  bool operator==(const BigUint&) const = default;

  bool less_than_u64(std::uint64_t v) const {
    if (limbs_.size() > 1) return false;
    return (limbs_.empty() ? 0 : limbs_[0]) < v;
  }

  bool fits_u64() const { return limbs_.size() <= 1; }
  std::uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }

 private:
  static int hex_nibble_(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }

  void shl4_() {
    std::uint64_t carry = 0;
    for (auto& w : limbs_) {
      std::uint64_t next = w >> 60;
      w = w << 4 | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }

  void trim_() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint64_t> limbs_;  // little-endian, normalized
};

}  // namespace circdlp

#endif  // CIRCDLP_BIGINT_HPP
