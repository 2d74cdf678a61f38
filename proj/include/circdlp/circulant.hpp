#ifndef CIRCDLP_CIRCULANT_HPP
#define CIRCDLP_CIRCULANT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "circdlp/bigint.hpp"
#include "circdlp/field.hpp"
#include "circdlp/linalg.hpp"
#include "circdlp/poly.hpp"

namespace circdlp {

/// The permutation pi with A^2 = circ(a_{pi(0)}^2, ..., a_{pi(d-1)}^2) in
/// characteristic 2 and odd d: pi(j) = (2^{-1} * j) mod d, so that the
/// coefficient of x^j in the square comes from the unique i with 2i = j (d).
class SquarePermutation {
 public:
  explicit SquarePermutation(unsigned d);

  unsigned d() const { return d_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t operator[](std::size_t j) const { return table_[j]; }

 private:
  unsigned d_;
  std::vector<std::uint32_t> table_;
};

class CrtPair;

/// A d x d circulant matrix over F_q, stored as its first row
/// (c_0, ..., c_{d-1}); equivalently the representer polynomial
/// c_0 + c_1 x + ... + c_{d-1} x^{d-1} in F_q[x]/(x^d - 1).
class Circulant {
 public:
  Circulant(const FieldSpec& spec, unsigned d, std::vector<std::uint64_t> row_values);

  static Circulant zero(const FieldSpec& spec, unsigned d);
  static Circulant identity(const FieldSpec& spec, unsigned d);
  /// W = circ(0, 1, 0, ..., 0); W^d is the identity.
  static Circulant shift(const FieldSpec& spec, unsigned d);
  static Circulant from_row(const std::vector<FieldElement>& row);
  /// From a representer polynomial of degree < d.
  static Circulant from_poly(const FieldSpec& spec, unsigned d, const Poly& p);

  const FieldSpec& spec() const { return spec_; }
  unsigned d() const { return d_; }
  FieldElement at(unsigned i) const { return FieldElement(spec_, row_[i]); }
  const std::vector<std::uint64_t>& row_values() const { return row_; }

  Poly representer() const { return Poly(spec_, row_); }

  /// Full d x d expansion: row i is the right circular shift of row i-1.
  Matrix expand() const;

  /// Ring product (cyclic convolution). Dispatches to a bit-packed shift-XOR
  /// path over F_2, which is exactly equivalent to the generic path.
  /// Counts one group multiplication.
  Circulant operator*(const Circulant& rhs) const;

  /// Ring sum (used by tests and the malleability property).
  Circulant operator+(const Circulant& rhs) const;

  /// The generic element-wise convolution, d^2 field multiplications,
  /// regardless of field. Exposed for oracle comparisons and the cost model.
  Circulant mul_generic(const Circulant& rhs) const;

  /// Theorem-1 squaring: result[j] = a[pi(j)]^2, d field squarings and no
  /// general multiplications. Requires characteristic 2 and odd d; misuse is
  /// an error, never a silent fallback.
  Circulant square_char2() const;

  /// a^e by square-and-multiply; squaring steps use square_char2 whenever its
  /// hypotheses hold, and the ring product otherwise. a^0 = identity.
  Circulant pow(std::uint64_t e) const;
  Circulant pow(const BigUint& e) const;

  /// Ring inverse by extended Euclid on (representer, x^d - 1); throws
  /// NotInvertibleError carrying the nontrivial gcd otherwise.
  Circulant inverse() const;

  /// True iff gcd(representer, x^d - 1) = 1.
  bool is_unit() const;

  /// Common row sum = representer(1); a ground-field eigenvalue, and a
  /// multiplicative function of the ring product.
  FieldElement row_sum() const;

  /// Determinant of the full expansion by Gaussian elimination.
  FieldElement det() const;

  /// (representer mod (x - 1), representer mod psi); requires gcd(d, q) = 1.
  CrtPair crt_split(const Poly& psi) const;
  /// Unique preimage of a CRT pair; inverse of crt_split.
  static Circulant crt_lift(const CrtPair& pair, unsigned d, const Poly& psi);

  bool operator==(const Circulant&) const = default;

  /// 4-byte big-endian d, then the d canonical element serializations.
  Bytes to_bytes() const;
  static Circulant from_bytes(const FieldSpec& spec, const Bytes& in);
  static Circulant from_bytes(const FieldSpec& spec, const Bytes& in, std::size_t& pos);
  std::string to_hex() const { return circdlp::to_hex(to_bytes()); }
  static Circulant from_hex(const FieldSpec& spec, const std::string& hex) {
    return from_bytes(spec, circdlp::from_hex(hex));
  }

  /// "circ(c0,c1,...)" with hex coefficient values.
  std::string to_display() const;

 private:
  void require_compatible(const Circulant& rhs) const;
  Circulant square_step(const SquarePermutation* perm) const;

  FieldSpec spec_;
  std::uint32_t d_;
  std::vector<std::uint64_t> row_;
};

/// Image of a circulant under F_q[x]/(x^d-1) ~ F_q[x]/(x-1) x F_q[x]/psi.
class CrtPair {
 public:
  CrtPair(FieldElement at_one, Poly residue)
      : at_one_(std::move(at_one)), residue_(std::move(residue)) {}

  const FieldElement& at_one() const { return at_one_; }
  const Poly& residue() const { return residue_; }

  bool operator==(const CrtPair&) const = default;

 private:
  FieldElement at_one_;
  Poly residue_;
};

/// Uniform random circulant.
Circulant random_circulant(const FieldSpec& spec, unsigned d, Rng& rng);
/// Uniform random invertible circulant (rejection sampling).
Circulant random_unit_circulant(const FieldSpec& spec, unsigned d, Rng& rng);

}  // namespace circdlp

#endif  // CIRCDLP_CIRCULANT_HPP
