#ifndef CIRCDLP_BENCH_HPP
#define CIRCDLP_BENCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "circdlp/opcount.hpp"
#include "circdlp/params.hpp"

namespace circdlp {

/// Measured counts and timing for circulant exponentiation plus the analytic
/// complexity comparison. Wall-clock numbers are reported, never asserted;
/// operation counts are the test-bearing quantities.
struct BenchReport {
  std::uint64_t seed = 0;
  unsigned exp_bits = 0;
  unsigned reps = 0;
  unsigned d = 0;
  std::uint64_t q_p = 0;
  unsigned q_k = 0;

  // One generic ring product (element-wise convolution): d^2 field mults.
  OpCounts mul_generic_counts;
  // One fast squaring, when characteristic 2 and odd d: d field squares,
  // zero field mults.
  std::optional<OpCounts> square_fast_counts;

  // One full exponentiation with a fresh exponent of exactly exp_bits bits.
  OpCounts expo_counts;
  bool fast_square_path = false;
  std::uint64_t measured_squarings = 0;
  std::uint64_t measured_multiplies = 0;   // fast path only: ring products
  std::uint64_t measured_square_or_mul = 0;  // generic path: combined count
  std::uint64_t predicted_squarings = 0;     // exponent bits - 1
  std::uint64_t predicted_multiplies = 0;    // set bits - 1
  bool model_ok = false;

  // Medians over reps (absent when reps = 0).
  std::optional<double> mul_ns;
  std::optional<double> square_ns;
  std::optional<double> expo_ns;

  // Analytic context: with an optimal normal basis the field F_{2^d} costs
  // 2d-1 per multiplication; the circulant ring costs d and carries the
  // security of F_{2^(d-1)}. These are quoted bounds, not measurements.
  std::uint64_t onb_mult_complexity = 0;        // 2d - 1
  std::uint64_t circulant_mult_complexity = 0;  // d
  unsigned security_field_bits = 0;             // d - 1 (char-2 view)
};

/// Runs the measurement at the given parameter set. The exponent is drawn
/// from the seed with its top bit forced so the bit length is exactly
/// exp_bits; reps controls timing repetitions only (0 = counts only).
BenchReport bench_exponentiation(const ParamSet& params, unsigned exp_bits, unsigned reps,
                                 std::uint64_t seed);

}  // namespace circdlp

#endif  // CIRCDLP_BENCH_HPP
