#include <doctest.h>

#include "circdlp/poly.hpp"
#include "circdlp/rng.hpp"

using namespace circdlp;

TEST_SUITE_BEGIN("poly");

namespace {
const std::vector<FieldSpec> kSpecs = {FieldSpec::binary(1), FieldSpec::binary(4),
                                       FieldSpec::prime(3), FieldSpec::prime(101)};
}

TEST_CASE("division invariant a = q*b + r") {
  for (const auto& spec : kSpecs) {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
      Poly a = random_poly_below(spec, 1 + static_cast<unsigned>(rng.below(12)), rng);
      Poly b = random_poly_below(spec, 1 + static_cast<unsigned>(rng.below(12)), rng);
      if (b.is_zero()) continue;
      auto qr = a.divmod(b);
      REQUIRE(qr.quotient * b + qr.remainder == a);
      REQUIRE(qr.remainder.degree() < b.degree());
    }
  }
  CHECK_THROWS_AS(Poly::one(kSpecs[0]) / Poly::zero(kSpecs[0]), DivisionByZeroError);
}

TEST_CASE("gcd divides both arguments and egcd satisfies Bezout") {
  for (const auto& spec : kSpecs) {
    Rng rng(43);
    for (int i = 0; i < 300; ++i) {
      Poly a = random_poly_below(spec, 1 + static_cast<unsigned>(rng.below(10)), rng);
      Poly b = random_poly_below(spec, 1 + static_cast<unsigned>(rng.below(10)), rng);
      if (a.is_zero() && b.is_zero()) continue;
      Poly g = poly_gcd(a, b);
      REQUIRE(!g.is_zero());
      REQUIRE((a % g).is_zero());
      REQUIRE((b % g).is_zero());
      auto e = poly_egcd(a, b);
      REQUIRE(e.g == g);
      REQUIRE(e.u * a + e.v * b == g);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (const auto& spec : kSpecs) {
    Rng rng(44);
    for (int i = 0; i < 300; ++i) {
      Poly f = random_poly_below(spec, 8, rng);
      Poly g = random_poly_below(spec, 8, rng);
      FieldElement c = random_element(spec, rng);
      REQUIRE((f * g).eval(c) == f.eval(c) * g.eval(c));
      REQUIRE((f + g).eval(c) == f.eval(c) + g.eval(c));
    }
  }
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
  for (const auto& spec : kSpecs) {
    Rng rng(45);
    Poly m = random_poly_below(spec, 5, rng) + Poly::monomial(spec, 5);
    Poly b = random_poly_below(spec, 5, rng);
    Poly acc = Poly::one(spec);
    for (unsigned e = 0; e < 24; ++e) {
      REQUIRE(poly_pow_mod(b, e, m) == acc);
      acc = acc * b % m;
    }
  }
}

TEST_CASE("frobenius power is the q-th power map") {
  for (const auto& spec : kSpecs) {
    Rng rng(46);
    Poly m = random_poly_below(spec, 4, rng) + Poly::monomial(spec, 4);
    Poly h = random_poly_below(spec, 4, rng);
    // q fits a word for the tested specs
    std::uint64_t q = 1;
    for (unsigned i = 0; i < spec.k(); ++i) q *= spec.p();
    REQUIRE(poly_frobenius_q(h, m) == poly_pow_mod(h, q, m));
  }
}

TEST_CASE("modular inverse") {
  for (const auto& spec : kSpecs) {
    Rng rng(47);
    Poly m = random_poly_below(spec, 6, rng) + Poly::monomial(spec, 6);
    for (int i = 0; i < 100; ++i) {
      Poly a = random_poly_below(spec, 6, rng);
      if (a.is_zero()) continue;
      if (poly_gcd(a, m).degree() != 0) {
        CHECK_THROWS_AS(poly_inverse_mod(a, m), NotInvertibleError);
        continue;
      }
      Poly inv = poly_inverse_mod(a, m);
      REQUIRE(a * inv % m == Poly::one(spec));
    }
  }
}

TEST_CASE("x_pow_minus_one and derivative") {
  FieldSpec f3 = FieldSpec::prime(3);
  Poly f = Poly::x_pow_minus_one(f3, 4);
  CHECK(f.coeff(0) == f3.element(2));
  CHECK(f.coeff(4) == f3.one());
  CHECK(f.eval(f3.one()).is_zero());

  // d/dx (x^4 - 1) = 4x^3 = x^3 over F_3
  Poly der = poly_derivative(f);
  CHECK(der == Poly::monomial(f3, 3));

  // char-2: d/dx (x^2) = 0
  FieldSpec f2 = FieldSpec::binary(1);
  CHECK(poly_derivative(Poly::monomial(f2, 2)).is_zero());
}

TEST_CASE("to_string rendering") {
  FieldSpec f2 = FieldSpec::binary(1);
  Poly psi(f2, {1, 1, 1});
  CHECK(psi.to_string() == "x^2 + x + 1");
  CHECK(Poly::zero(f2).to_string() == "0");
}

TEST_SUITE_END();
