#ifndef CIRCDLP_POLY_HPP
#define CIRCDLP_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "circdlp/field.hpp"

namespace circdlp {

class Poly;

/// Quotient and remainder of polynomial division.
struct PolyDivMod;

/// Dense univariate polynomial over F_q, normalized (no leading zeros; the
/// zero polynomial has an empty coefficient vector and degree -1).
class Poly {
 public:
  explicit Poly(const FieldSpec& spec) : spec_(spec) {}
  Poly(const FieldSpec& spec, std::vector<std::uint64_t> coeff_values)
      : spec_(spec), c_(std::move(coeff_values)) {
    normalize_();
  }

  static Poly zero(const FieldSpec& spec) { return Poly(spec); }
  static Poly one(const FieldSpec& spec) { return Poly(spec, {1}); }
  static Poly x(const FieldSpec& spec) { return Poly(spec, {0, 1}); }
  static Poly constant(const FieldElement& c) { return Poly(c.spec(), {c.value()}); }
  static Poly monomial(const FieldSpec& spec, unsigned degree, std::uint64_t coeff = 1) {
    std::vector<std::uint64_t> v(degree + 1, 0);
    v[degree] = coeff;
    return Poly(spec, std::move(v));
  }
  /// x^d - 1 (the circulant ring modulus).
  static Poly x_pow_minus_one(const FieldSpec& spec, unsigned d);
  static Poly from_elements(const std::vector<FieldElement>& coeffs);

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  FieldElement coeff(unsigned i) const {
    if (i >= c_.size()) return spec_.zero();
    return FieldElement(spec_, c_[i]);
  }
  FieldElement lead() const {
    return c_.empty() ? spec_.zero() : FieldElement(spec_, c_.back());
  }
  const std::vector<std::uint64_t>& coeff_values() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const FieldElement& c) const;
  Poly shifted(unsigned n) const;  // multiply by x^n

  /// Quotient and remainder; rhs must be nonzero.
  PolyDivMod divmod(const Poly& rhs) const;
  Poly operator%(const Poly& rhs) const;
  Poly operator/(const Poly& rhs) const;

  Poly monic() const;

  FieldElement eval(const FieldElement& at) const;

  bool operator==(const Poly&) const = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize_() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  FieldSpec spec_;
  std::vector<std::uint64_t> c_;  // c_[i] = value of the coefficient of x^i
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

inline Poly Poly::operator%(const Poly& rhs) const { return divmod(rhs).remainder; }
inline Poly Poly::operator/(const Poly& rhs) const { return divmod(rhs).quotient; }

/// Monic gcd of a and b.
Poly poly_gcd(const Poly& a, const Poly& b);

/// g = u*a + v*b with g the monic gcd.
struct PolyEgcd {
  Poly g, u, v;
};
PolyEgcd poly_egcd(const Poly& a, const Poly& b);

/// base^e mod m by square-and-multiply.
Poly poly_pow_mod(const Poly& base, std::uint64_t e, const Poly& m);

/// h^q mod m where q = p^k is the field size, computed as k successive p-th
/// powers so the exponent never exceeds a machine word.
Poly poly_frobenius_q(const Poly& h, const Poly& m);

/// Inverse of a modulo m; throws NotInvertibleError when gcd(a, m) != 1.
Poly poly_inverse_mod(const Poly& a, const Poly& m);

/// Formal derivative.
Poly poly_derivative(const Poly& f);

/// Uniform polynomial of degree < deg_bound.
Poly random_poly_below(const FieldSpec& spec, unsigned deg_bound, Rng& rng);

}  // namespace circdlp

#endif  // CIRCDLP_POLY_HPP
