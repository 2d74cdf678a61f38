#include "circdlp/protocol.hpp"

#include <bit>

namespace circdlp {

namespace {

BigUint random_exponent(Rng& rng, unsigned exp_bits) {
  for (;;) {
    BigUint e = BigUint::random_bits(rng, exp_bits);
    if (!e.less_than_u64(2)) return e;
  }
}

unsigned bits_per_coefficient(const FieldSpec& spec) {
  if (spec.is_char2()) return spec.k();
  return 63 - std::countl_zero(spec.p());  // floor(log2 p); values < 2^bits < p
}

}  // namespace

KeyPair keygen(const ParamSet& params, Rng& rng, unsigned exp_bits) {
  if (exp_bits < 2) throw Error("exponent width must be at least 2 bits");
  if (!params.checks.generator_invertible)
    throw Error("parameter set failed validation: generator is not invertible");
  BigUint secret = random_exponent(rng, exp_bits);
  Circulant pub = params.generator.pow(secret);
  return {params, std::move(secret), std::move(pub)};
}

Circulant dh_shared(const BigUint& my_secret, const Circulant& their_public) {
  if (!their_public.is_unit())
    throw NotInvertibleError("peer value is not invertible; rejecting key agreement", "");
  return their_public.pow(my_secret);
}

Bytes Ciphertext::to_bytes() const {
  Bytes out;
  append_be(out, c1.d(), 4);
  Bytes b1 = c1.to_bytes();
  Bytes b2 = c2.to_bytes();
  out.insert(out.end(), b1.begin(), b1.end());
  out.insert(out.end(), b2.begin(), b2.end());
  return out;
}

Ciphertext Ciphertext::from_bytes(const FieldSpec& spec, const Bytes& in) {
  std::size_t pos = 0;
  std::uint64_t d = read_be(in, pos, 4);
  Circulant c1 = Circulant::from_bytes(spec, in, pos);
  Circulant c2 = Circulant::from_bytes(spec, in, pos);
  if (pos != in.size()) throw ParseError("trailing bytes after ciphertext");
  if (c1.d() != d || c2.d() != d)
    throw ParseError("ciphertext component dimensions disagree with header");
  return {std::move(c1), std::move(c2)};
}

int message_capacity(const FieldSpec& spec, unsigned d) {
  std::uint64_t payload_bits =
      static_cast<std::uint64_t>(d - 1) * bits_per_coefficient(spec);
  return static_cast<int>(payload_bits / 8) - 2;
}

Circulant encode_message(const FieldSpec& spec, unsigned d, const Bytes& message) {
  int cap = message_capacity(spec, d);
  if (cap < 0 || message.size() > static_cast<std::size_t>(cap))
    throw EncodingError("message of " + std::to_string(message.size()) +
                        " bytes exceeds block capacity of " + std::to_string(cap) + " bytes");
  Bytes stream;
  stream.reserve(2 + message.size());
  append_be(stream, message.size(), 2);
  stream.insert(stream.end(), message.begin(), message.end());

  unsigned bpc = bits_per_coefficient(spec);
  std::vector<std::uint64_t> row(d, 0);
  std::size_t bit = 0;
  const std::size_t total_bits = stream.size() * 8;
  for (unsigned c = 1; c < d && bit < total_bits; ++c) {
    std::uint64_t v = 0;
    for (unsigned b = 0; b < bpc && bit < total_bits; ++b, ++bit) {
      unsigned byte_bit = 7 - static_cast<unsigned>(bit % 8);  // MSB first
      std::uint64_t stream_bit = stream[bit / 8] >> byte_bit & 1;
      v |= stream_bit << (bpc - 1 - b);
    }
    row[c] = v;
  }
  return Circulant(spec, d, std::move(row));
}

Bytes decode_message(const Circulant& block) {
  const FieldSpec& spec = block.spec();
  unsigned d = block.d();
  unsigned bpc = bits_per_coefficient(spec);
  if (block.at(0).value() != 0) throw EncodingError("block has nonzero constant coefficient");

  // Re-assemble the bit stream MSB-first.
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(d - 1) * bpc);
  for (unsigned c = 1; c < d; ++c) {
    std::uint64_t v = block.at(c).value();
    if (!spec.is_char2() && v >> bpc)
      throw EncodingError("coefficient value outside the packed range");
    for (unsigned b = 0; b < bpc; ++b) bits.push_back(v >> (bpc - 1 - b) & 1);
  }
  if (bits.size() < 16) throw EncodingError("block too small for a length header");
  std::size_t len = 0;
  for (unsigned i = 0; i < 16; ++i) len = len << 1 | (bits[i] ? 1 : 0);
  int cap = message_capacity(spec, d);
  if (cap < 0 || len > static_cast<std::size_t>(cap))
    throw EncodingError("length header exceeds block capacity");
  if (bits.size() < 16 + len * 8) throw EncodingError("length header exceeds available bits");
  Bytes out(len, 0);
  for (std::size_t i = 0; i < len * 8; ++i)
    if (bits[16 + i]) out[i / 8] |= std::uint8_t{1} << (7 - i % 8);
  for (std::size_t i = 16 + len * 8; i < bits.size(); ++i)
    if (bits[i]) throw EncodingError("nonzero padding after payload");
  return out;
}

Ciphertext elgamal_encrypt(const ParamSet& params, const Circulant& public_key,
                           const Bytes& message, Rng& rng, unsigned exp_bits) {
  if (public_key.d() != params.d || public_key.spec() != params.spec)
    throw DimensionError("public key does not match parameter set");
  Circulant block = encode_message(params.spec, params.d, message);
  BigUint r = random_exponent(rng, exp_bits);
  Circulant c1 = params.generator.pow(r);
  Circulant c2 = block * public_key.pow(r);
  return {std::move(c1), std::move(c2)};
}

Circulant elgamal_decrypt_block(const KeyPair& key, const Ciphertext& ct) {
  if (ct.c1.d() != key.params.d || ct.c1.spec() != key.params.spec)
    throw DimensionError("ciphertext does not match the key's parameter set");
  Circulant mask = ct.c1.pow(key.secret);
  return ct.c2 * mask.inverse();
}

Bytes elgamal_decrypt(const KeyPair& key, const Ciphertext& ct) {
  return decode_message(elgamal_decrypt_block(key, ct));
}

}  // namespace circdlp
