#ifndef CIRCDLP_LINALG_HPP
#define CIRCDLP_LINALG_HPP

#include <cstdint>
#include <vector>

#include "circdlp/field.hpp"
#include "circdlp/poly.hpp"

namespace circdlp {

/// Dense square matrix over F_q. Row-major storage of raw element values.
class Matrix {
 public:
  Matrix(const FieldSpec& spec, unsigned n)
      : spec_(spec), n_(n), v_(static_cast<std::size_t>(n) * n, 0) {}

  static Matrix identity(const FieldSpec& spec, unsigned n) {
    Matrix m(spec, n);
    for (unsigned i = 0; i < n; ++i) m.set(i, i, spec.one());
    return m;
  }

  const FieldSpec& spec() const { return spec_; }
  unsigned n() const { return n_; }

  FieldElement at(unsigned i, unsigned j) const {
    return FieldElement(spec_, v_[static_cast<std::size_t>(i) * n_ + j]);
  }
  void set(unsigned i, unsigned j, const FieldElement& e) {
    v_[static_cast<std::size_t>(i) * n_ + j] = e.value();
  }
  std::uint64_t raw(unsigned i, unsigned j) const {
    return v_[static_cast<std::size_t>(i) * n_ + j];
  }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix&) const = default;

  /// Determinant by Gaussian elimination (bit-packed for F_2).
  FieldElement det() const;

 private:
  FieldSpec spec_;
  unsigned n_;
  std::vector<std::uint64_t> v_;
};

/// Monic characteristic polynomial det(xI - M), degree n, computed by
/// similarity reduction to Hessenberg form followed by the standard
/// recurrence on leading principal minors.
Poly charpoly(const Matrix& m);

}  // namespace circdlp

#endif  // CIRCDLP_LINALG_HPP
