#include <doctest.h>

#include <set>

#include "circdlp/field.hpp"
#include "circdlp/params.hpp"
#include "circdlp/rng.hpp"

using namespace circdlp;

TEST_SUITE_BEGIN("field");

namespace {

std::vector<FieldSpec> tested_fields() {
  return {
      FieldSpec::binary(1),  FieldSpec::binary(2),  FieldSpec::binary(8),
      FieldSpec::binary(13), FieldSpec::binary(31), FieldSpec::binary(64),
      FieldSpec::prime(3),   FieldSpec::prime(7),   FieldSpec::prime(1009),
      FieldSpec::prime(2147483647),
  };
}

}  // namespace

TEST_CASE("addition examples") {
  FieldSpec f2 = FieldSpec::binary(1);
  CHECK((f2.one() + f2.one()).is_zero());

  FieldSpec f4 = FieldSpec::binary(2);
  FieldElement t = f4.element(2);  // the generator t
  CHECK(t + f4.zero() == t);

  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(f3.element(2) + f3.element(2) == f3.one());
}

TEST_CASE("multiplication examples") {
  FieldSpec f4 = FieldSpec::binary(2);  // F_2[t]/(t^2+t+1)
  FieldElement t = f4.element(2);
  CHECK(t * t == f4.element(3));  // t^2 = t + 1

  for (const auto& spec : tested_fields()) {
    Rng rng(7);
    FieldElement a = random_element(spec, rng);
    CHECK(a * spec.one() == a);
  }

  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(f3.element(2) * f3.element(2) == f3.one());
}

TEST_CASE("inverse examples") {
  FieldSpec f2 = FieldSpec::binary(1);
  CHECK(f2.one().inverse() == f2.one());

  FieldSpec f4 = FieldSpec::binary(2);
  FieldElement t = f4.element(2);
  CHECK(t.inverse() == f4.element(3));  // t * (t+1) = 1

  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.element(3).inverse() == f7.element(5));

  CHECK_THROWS_AS(f7.zero().inverse(), DivisionByZeroError);
}

TEST_CASE("squaring examples") {
  FieldSpec f2 = FieldSpec::binary(1);
  CHECK(f2.zero().square() == f2.zero());
  CHECK(f2.one().square() == f2.one());

  FieldSpec f4 = FieldSpec::binary(2);
  FieldElement t = f4.element(2);
  CHECK(t.square() == t * t);
  CHECK(t.square() == f4.element(3));

  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(f3.element(2).square() == f3.one());
}

TEST_CASE("power examples") {
  FieldSpec f4 = FieldSpec::binary(2);
  FieldElement t = f4.element(2);
  CHECK(t.pow(3) == f4.one());  // F_4^* has order 3

  for (const auto& spec : tested_fields()) {
    Rng rng(11);
    FieldElement a = random_element(spec, rng);
    CHECK(a.pow(1) == a);
    CHECK(a.pow(0) == spec.one());
  }

  CHECK(FieldSpec::binary(1).one().pow(1000000000ull) == FieldSpec::binary(1).one());
  CHECK(FieldSpec::prime(7).zero().pow(0) == FieldSpec::prime(7).one());
}

TEST_CASE("field axioms on random triples") {
  for (const auto& spec : tested_fields()) {
    Rng rng(spec.p() * 1000 + spec.k());
    for (int i = 0; i < 10000; ++i) {
      FieldElement a = random_element(spec, rng);
      FieldElement b = random_element(spec, rng);
      FieldElement c = random_element(spec, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE((a + a.neg()).is_zero());
      if (!a.is_zero()) REQUIRE(a * a.inverse() == spec.one());
      REQUIRE(a.square() == a * a);
    }
  }
}

TEST_CASE("squaring is a bijection in characteristic 2") {
  for (unsigned k : {1u, 4u, 8u, 12u, 16u}) {
    FieldSpec spec = FieldSpec::binary(k);
    std::set<std::uint64_t> images;
    std::uint64_t q = std::uint64_t{1} << k;
    for (std::uint64_t v = 0; v < q; ++v)
      images.insert(FieldElement(spec, v).square().value());
    CHECK(images.size() == q);
  }
}

TEST_CASE("a^(q-1) = 1 for nonzero a, exhaustively for small q") {
  std::vector<FieldSpec> specs;
  for (unsigned k = 1; k <= 10; ++k) specs.push_back(FieldSpec::binary(k));
  for (std::uint64_t p : {3ull, 7ull, 31ull, 127ull, 1021ull}) specs.push_back(FieldSpec::prime(p));
  for (const auto& spec : specs) {
    std::uint64_t q_minus_1 = spec.q_minus_one();
    for (std::uint64_t v = 1; v <= q_minus_1; ++v)
      REQUIRE(FieldElement(spec, v).pow(q_minus_1) == spec.one());
  }
}

TEST_CASE("mismatched fields refuse arithmetic") {
  FieldElement a = FieldSpec::binary(2).one();
  FieldElement b = FieldSpec::binary(8).one();
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a * b, FieldMismatchError);
  // equality across specs is false, not an error
  CHECK(a != b);
}

TEST_CASE("built-in modulus table entries are irreducible") {
  for (unsigned k = 2; k <= 64; ++k) {
    FieldSpec spec = FieldSpec::binary(k);
    auto coeffs = spec.modulus_coefficients();
    REQUIRE(coeffs.size() == k + 1);
    REQUIRE(coeffs[k] == 1);
    Poly modulus(FieldSpec::binary(1), coeffs);
    CAPTURE(k);
    REQUIRE(is_irreducible(modulus));
  }
}

TEST_CASE("element construction reduces to canonical form") {
  FieldSpec f4 = FieldSpec::binary(2);
  // t^2 = t + 1: value 4 (t^2) reduces to 3 (t+1)
  CHECK(f4.element(4) == f4.element(3));

  FieldSpec f7 = FieldSpec::prime(7);
  CHECK(f7.element(10) == f7.element(3));

  // full-width field accepts any word
  FieldSpec f64 = FieldSpec::binary(64);
  CHECK(f64.element(~std::uint64_t{0}).value() == ~std::uint64_t{0});
}

TEST_CASE("spec construction rejects bad input") {
  CHECK_THROWS_AS(FieldSpec::binary(0), Error);
  CHECK_THROWS_AS(FieldSpec::binary(65), Error);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(FieldSpec::prime(std::uint64_t{1} << 32), Error);
  CHECK(FieldSpec::prime(2) == FieldSpec::binary(1));
}

TEST_CASE("canonical serialization") {
  FieldSpec f9bits = FieldSpec::binary(9);
  CHECK(f9bits.element_bytes() == 2);
  FieldElement e(f9bits, 0x1a5);
  Bytes b = e.to_bytes();
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 0x01);
  CHECK(b[1] == 0xa5);
  std::size_t pos = 0;
  CHECK(FieldElement::from_bytes(f9bits, b, pos) == e);

  FieldSpec f1009 = FieldSpec::prime(1009);
  CHECK(f1009.element_bytes() == 2);
  Bytes pb = f1009.element(515).to_bytes();
  CHECK(pb[0] == 0x02);
  CHECK(pb[1] == 0x03);

  // out-of-range values are rejected on parse
  Bytes bad = {0x03, 0xff};
  pos = 0;
  CHECK_THROWS_AS(FieldElement::from_bytes(f1009, bad, pos), ParseError);

  for (const auto& spec : tested_fields()) {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      FieldElement a = random_element(spec, rng);
      Bytes bytes = a.to_bytes();
      REQUIRE(bytes.size() == spec.element_bytes());
      std::size_t p = 0;
      REQUIRE(FieldElement::from_bytes(spec, bytes, p) == a);
    }
  }
}

TEST_CASE("modulus hex round-trips") {
  for (unsigned k : {2u, 8u, 13u, 63u, 64u}) {
    FieldSpec spec = FieldSpec::binary(k);
    std::string hex = spec.modulus_hex();
    REQUIRE(!hex.empty());
    std::uint64_t low = FieldSpec::modulus_low_from_hex(k, hex);
    CHECK(low == spec.modulus_low());
  }
  CHECK(FieldSpec::binary(1).modulus_hex() == "");
  CHECK(FieldSpec::prime(7).modulus_hex() == "");
  // F_4 modulus t^2 + t + 1 -> bits 111 -> 0x7
  CHECK(FieldSpec::binary(2).modulus_hex() == "7");
}

TEST_SUITE_END();
