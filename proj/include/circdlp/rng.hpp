#ifndef CIRCDLP_RNG_HPP
#define CIRCDLP_RNG_HPP

#include <bit>
#include <cstdint>
#include <random>

namespace circdlp {

/// Seedable randomness source.
///
/// Wraps std::mt19937_64 but never touches the standard distributions, whose
/// output is implementation-defined; the sampling here is fully specified so
/// a seed produces identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }

  /// Uniform value in [0, n). Requires n >= 1.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    std::uint64_t r;
    do {
      r = word() & mask;
    } while (r >= n);
    return r;
  }

  /// Uniform value in [0, 2^bits). Requires bits <= 64.
  std::uint64_t bits_u64(unsigned bits) {
    if (bits == 0) return 0;
    return word() >> (64 - bits);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace circdlp

#endif  // CIRCDLP_RNG_HPP
