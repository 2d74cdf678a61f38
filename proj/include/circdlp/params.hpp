#ifndef CIRCDLP_PARAMS_HPP
#define CIRCDLP_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circdlp/circulant.hpp"
#include "circdlp/field.hpp"
#include "circdlp/poly.hpp"
#include "circdlp/rng.hpp"

namespace circdlp {

/// Deterministic primality verdict for n < 2^63.
bool is_prime(std::uint64_t n);

/// Least t > 0 with q^t = 1 (mod d). Requires gcd(q, d) = 1 and d >= 2.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t d);

/// True iff the order of q mod d is d - 1. Requires d prime and gcd(q,d)=1.
/// For prime d this is equivalent to psi = Phi_d being irreducible over F_q.
bool is_q_primitive_mod_d(std::uint64_t q, std::uint64_t d);

/// psi(x) = (x^d - 1)/(x - 1) = 1 + x + ... + x^{d-1}.
Poly build_psi(unsigned d, const FieldSpec& spec);

/// Irreducibility over F_q: f is reducible iff it shares a factor with
/// x^{q^i} - x for some i <= deg(f)/2, since that product covers every
/// irreducible of degree dividing i.
bool is_irreducible(const Poly& f);

/// Full factorization as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);

/// Per-condition validation outcome. Conditions are evaluated independently;
/// failures are entries here, never exceptions.
struct ConditionReport {
  bool det_is_one = false;                // (i)
  bool row_sum_is_one = false;            // (ii); coincides with (v)
  bool quotient_irreducible = false;      // (iii), via the prime-d criterion
  bool dimension_prime = false;           // (iv)
  bool representer_at_one_is_one = false; // (v); same computation as (ii)
  bool q_primitive_mod_d = false;         // (vi)
  bool gcd_d_q_is_one = false;
  bool generator_order_ok = false;
  bool generator_invertible = false;

  // Order-check evidence.
  bool order_exact = false;
  std::uint64_t exact_order = 0;            // when order_exact
  unsigned smooth_bits = 0;                 // bits of the removed smooth part
  unsigned cofactor_bits = 0;               // bits of the unfactored cofactor
  bool survived_smooth_power = false;       // generator^smooth != identity

  std::vector<std::string> notes;

  bool all_passed() const {
    return det_is_one && row_sum_is_one && quotient_irreducible && dimension_prime &&
           representer_at_one_is_one && q_primitive_mod_d && gcd_d_q_is_one &&
           generator_order_ok && generator_invertible;
  }
};

/// A full parameter set: the field, the dimension, psi, the generator A and
/// the record of which conditions it satisfies.
struct ParamSet {
  FieldSpec spec;
  unsigned d;
  Poly psi;
  Circulant generator;
  unsigned min_order_bits;
  ConditionReport checks;

  ParamSet(FieldSpec s, unsigned dim, Poly psi_poly, Circulant gen, unsigned order_bits)
      : spec(std::move(s)),
        d(dim),
        psi(std::move(psi_poly)),
        generator(std::move(gen)),
        min_order_bits(order_bits) {}
};

/// Evaluates every condition on ps.generator and returns the report.
ConditionReport validate_params(const ParamSet& ps, unsigned min_order_bits);

/// Samples a generator A = crt_lift(1, beta) with beta a random unit of
/// F_q[x]/psi; for q > 2, beta = gamma^{q-1} so the norm, and hence det(A),
/// is 1 by construction. Retries until the order bound holds.
Circulant generate_generator(const FieldSpec& spec, unsigned d, Rng& rng,
                             unsigned min_order_bits, unsigned max_tries = 200);

/// Builds a ParamSet around an existing generator and validates it.
ParamSet make_param_set(const FieldSpec& spec, unsigned d, Circulant generator,
                        unsigned min_order_bits);

/// Generates a fresh generator and wraps it into a validated ParamSet.
ParamSet generate_param_set(const FieldSpec& spec, unsigned d, Rng& rng,
                            unsigned min_order_bits);

/// Curated presets (see README): d5, d7, d11, d13 over F_2; d5w, d11w over
/// wider char-2 fields for message encryption; d1019, a large demo set
/// derived deterministically on first use. d7 deliberately violates the
/// primitivity condition.
std::vector<std::string> preset_names();
const ParamSet& preset(const std::string& name);

/// Factorization of the projected group order q^{d-1} - 1 for presets where
/// it is known at desk scale.
std::optional<std::vector<std::pair<std::uint64_t, unsigned>>> preset_group_order_factorization(
    const ParamSet& ps);

/// Exact order of the generator image in (F_q[x]/psi)^* when the group order
/// fits a machine word; used by the order check and the attack lab.
std::uint64_t circulant_order_u64(const Circulant& unit_with_row_sum_one,
                                  std::uint64_t group_order,
                                  const std::vector<std::pair<std::uint64_t, unsigned>>& factorization);

}  // namespace circdlp

#endif  // CIRCDLP_PARAMS_HPP
