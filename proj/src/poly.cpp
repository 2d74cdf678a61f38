#include "circdlp/poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

namespace circdlp {

Poly Poly::x_pow_minus_one(const FieldSpec& spec, unsigned d) {
  std::vector<std::uint64_t> v(d + 1, 0);
  v[0] = spec.is_char2() ? 1 : spec.p() - 1;
  v[d] = 1;
  return Poly(spec, std::move(v));
}

Poly Poly::from_elements(const std::vector<FieldElement>& coeffs) {
  if (coeffs.empty()) throw Error("from_elements requires at least one coefficient");
  std::vector<std::uint64_t> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.spec() != coeffs[0].spec())
      throw FieldMismatchError("polynomial coefficients from different fields");
    v.push_back(c.value());
  }
  return Poly(coeffs[0].spec(), std::move(v));
}

Poly Poly::operator+(const Poly& rhs) const {
  if (spec_ != rhs.spec_) throw FieldMismatchError("adding polynomials over different fields");
  std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    FieldElement s = coeff(static_cast<unsigned>(i)) + rhs.coeff(static_cast<unsigned>(i));
    out[i] = s.value();
  }
  return Poly(spec_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
  if (spec_ != rhs.spec_) throw FieldMismatchError("subtracting polynomials over different fields");
  std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    FieldElement s = coeff(static_cast<unsigned>(i)) - rhs.coeff(static_cast<unsigned>(i));
    out[i] = s.value();
  }
  return Poly(spec_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (spec_ != rhs.spec_) throw FieldMismatchError("multiplying polynomials over different fields");
  if (is_zero() || rhs.is_zero()) return zero(spec_);
  std::vector<FieldElement> acc(c_.size() + rhs.c_.size() - 1, spec_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    FieldElement ai(spec_, c_[i]);
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      FieldElement bj(spec_, rhs.c_[j]);
      if (bj.is_zero()) continue;
      acc[i + j] = acc[i + j] + ai * bj;
    }
  }
  std::vector<std::uint64_t> out;
  out.reserve(acc.size());
  for (const auto& e : acc) out.push_back(e.value());
  return Poly(spec_, std::move(out));
}

Poly Poly::scaled(const FieldElement& c) const {
  if (c.spec() != spec_) throw FieldMismatchError("scaling by an element of a different field");
  if (c.is_zero()) return zero(spec_);
  std::vector<std::uint64_t> out;
  out.reserve(c_.size());
  for (std::uint64_t v : c_) out.push_back((FieldElement(spec_, v) * c).value());
  return Poly(spec_, std::move(out));
}

Poly Poly::shifted(unsigned n) const {
  if (is_zero() || n == 0) return n == 0 ? *this : zero(spec_);
  std::vector<std::uint64_t> out(c_.size() + n, 0);
  std::copy(c_.begin(), c_.end(), out.begin() + n);
  return Poly(spec_, std::move(out));
}

PolyDivMod Poly::divmod(const Poly& rhs) const {
  if (spec_ != rhs.spec_) throw FieldMismatchError("dividing polynomials over different fields");
  if (rhs.is_zero()) throw DivisionByZeroError("polynomial division by zero");
  if (degree() < rhs.degree()) return {zero(spec_), *this};
  FieldElement inv_lead = rhs.lead().inverse();
  std::vector<FieldElement> rem;
  rem.reserve(c_.size());
  for (std::uint64_t v : c_) rem.emplace_back(spec_, v);
  const std::size_t db = rhs.c_.size() - 1;  // degree of divisor
  std::vector<std::uint64_t> quot(c_.size() - db, 0);
  for (std::size_t i = c_.size() - 1; i >= db; --i) {
    FieldElement f = rem[i] * inv_lead;
    if (!f.is_zero()) {
      std::size_t shift = i - db;
      quot[shift] = f.value();
      for (std::size_t j = 0; j <= db; ++j)
        rem[shift + j] = rem[shift + j] - f * FieldElement(spec_, rhs.c_[j]);
    }
    if (i == db) break;
  }
  std::vector<std::uint64_t> rv;
  rv.reserve(db);
  for (std::size_t j = 0; j < db; ++j) rv.push_back(rem[j].value());
  return {Poly(spec_, std::move(quot)), Poly(spec_, std::move(rv))};
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(lead().inverse());
}

FieldElement Poly::eval(const FieldElement& at) const {
  if (at.spec() != spec_) throw FieldMismatchError("evaluating at a point of a different field");
  FieldElement acc = spec_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + FieldElement(spec_, c_[i]);
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string term;
    if (i == 0 || c_[i] != 1) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(c_[i]));
      term = buf;
    }
    if (i >= 1) {
      if (!term.empty()) term += "*";
      term += var;
      if (i >= 2) term += "^" + std::to_string(i);
    }
    out += term;
  }
  return out;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Poly r2 = r0 % r1;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

PolyEgcd poly_egcd(const Poly& a, const Poly& b) {
  const FieldSpec& spec = a.spec();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(spec), u1 = Poly::zero(spec);
  Poly v0 = Poly::zero(spec), v1 = Poly::one(spec);
  while (!r1.is_zero()) {
    auto qr = r0.divmod(r1);
    Poly r2 = std::move(qr.remainder);
    Poly u2 = u0 - qr.quotient * u1;
    Poly v2 = v0 - qr.quotient * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {r0, u0, v0};
  FieldElement scale = r0.lead().inverse();
  return {r0.scaled(scale), u0.scaled(scale), v0.scaled(scale)};
}

Poly poly_pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly acc = Poly::one(base.spec());
  if (e == 0) return acc % m;
  Poly b = base % m;
  int top = 63 - std::countl_zero(e);
  acc = b;
  for (int i = top - 1; i >= 0; --i) {
    acc = acc * acc % m;
    if (e >> i & 1) acc = acc * b % m;
  }
  return acc;
}

Poly poly_frobenius_q(const Poly& h, const Poly& m) {
  Poly acc = h % m;
  for (unsigned i = 0; i < h.spec().k(); ++i) acc = poly_pow_mod(acc, h.spec().p(), m);
  return acc;
}

Poly poly_inverse_mod(const Poly& a, const Poly& m) {
  PolyEgcd e = poly_egcd(a % m, m);
  if (e.g.degree() != 0)
    throw NotInvertibleError("polynomial is not invertible modulo " + m.to_string(),
                             e.g.to_string());
  return e.u % m;
}

Poly poly_derivative(const Poly& f) {
  const FieldSpec& spec = f.spec();
  if (f.degree() < 1) return Poly::zero(spec);
  std::vector<std::uint64_t> out(f.degree(), 0);
  for (int i = 1; i <= f.degree(); ++i) {
    FieldElement scale = spec.zero();
    FieldElement one = spec.one();
    for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(i) % spec.p(); ++j)
      scale = scale + one;
    out[i - 1] = (scale * f.coeff(static_cast<unsigned>(i))).value();
  }
  return Poly(spec, std::move(out));
}

Poly random_poly_below(const FieldSpec& spec, unsigned deg_bound, Rng& rng) {
  std::vector<std::uint64_t> v(deg_bound, 0);
  for (auto& c : v) c = random_element(spec, rng).value();
  return Poly(spec, std::move(v));
}

}  // namespace circdlp
