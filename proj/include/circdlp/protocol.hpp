#ifndef CIRCDLP_PROTOCOL_HPP
#define CIRCDLP_PROTOCOL_HPP

#include <cstdint>

#include "circdlp/bigint.hpp"
#include "circdlp/params.hpp"

namespace circdlp {

/// Default exponent width in bits for secrets and encryption nonces.
inline constexpr unsigned kDefaultExpBits = 160;

/// A secret exponent m and the public power B = A^m.
struct KeyPair {
  ParamSet params;
  BigUint secret;
  Circulant public_key;
};

/// Uniform secret in [2, 2^exp_bits), public key by square-and-multiply.
KeyPair keygen(const ParamSet& params, Rng& rng, unsigned exp_bits = kDefaultExpBits);

/// their_public^my_secret. Rejects non-invertible inputs (small-subgroup and
/// garbage-point hygiene); both sides of an exchange derive the same value.
Circulant dh_shared(const BigUint& my_secret, const Circulant& their_public);

/// Textbook ElGamal over the circulant unit group: c1 = A^r, c2 = M * B^r.
struct Ciphertext {
  Circulant c1;
  Circulant c2;

  /// Wire format: 4-byte big-endian d, then the c1 and c2 serializations.
  Bytes to_bytes() const;
  static Ciphertext from_bytes(const FieldSpec& spec, const Bytes& in);
};

/// Maximum message length in bytes for a field/dimension pair: the payload
/// and a 2-byte length header are bit-packed into coefficients c_1..c_{d-1},
/// each of which carries k bits (characteristic 2) or floor(log2 p) bits
/// (odd p). Can be negative-capacity for tiny parameter sets, in which case
/// no message fits.
int message_capacity(const FieldSpec& spec, unsigned d);

/// Injective block encoding: 2-byte big-endian length, payload bits packed
/// MSB-first into c_1..c_{d-1}; c_0 = 0 and unused trailing bits are zero.
Circulant encode_message(const FieldSpec& spec, unsigned d, const Bytes& message);

/// Exact inverse of encode_message; rejects nonzero c_0, an oversized length
/// header, or nonzero padding.
Bytes decode_message(const Circulant& block);

Ciphertext elgamal_encrypt(const ParamSet& params, const Circulant& public_key,
                           const Bytes& message, Rng& rng,
                           unsigned exp_bits = kDefaultExpBits);

/// decode(c2 * (c1^m)^-1); the inversion goes through the extended-Euclid
/// ring inverse, never through exponent-order arithmetic.
Bytes elgamal_decrypt(const KeyPair& key, const Ciphertext& ct);

/// The raw decrypted block before decoding (exposes the homomorphic
/// behaviour of the textbook scheme).
Circulant elgamal_decrypt_block(const KeyPair& key, const Ciphertext& ct);

}  // namespace circdlp

#endif  // CIRCDLP_PROTOCOL_HPP
