#ifndef CIRCDLP_BYTES_HPP
#define CIRCDLP_BYTES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "circdlp/errors.hpp"

namespace circdlp {

using Bytes = std::vector<std::uint8_t>;

inline std::string to_hex(const Bytes& data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

inline int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

inline Bytes from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw ParseError("hex string has odd length");
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) throw ParseError("invalid hex digit in \"" + hex + "\"");
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

/// Appends `n` as exactly `width` big-endian bytes.
inline void append_be(Bytes& out, std::uint64_t n, unsigned width) {
  for (unsigned i = 0; i < width; ++i)
    out.push_back(static_cast<std::uint8_t>(n >> (8 * (width - 1 - i))));
}

/// Reads `width` big-endian bytes starting at `pos`; advances `pos`.
inline std::uint64_t read_be(const Bytes& in, std::size_t& pos, unsigned width) {
  if (pos + width > in.size()) throw ParseError("truncated input");
  std::uint64_t n = 0;
  for (unsigned i = 0; i < width; ++i) n = n << 8 | in[pos + i];
  pos += width;
  return n;
}

}  // namespace circdlp

#endif  // CIRCDLP_BYTES_HPP
