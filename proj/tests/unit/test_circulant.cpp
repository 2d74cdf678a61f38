#include <doctest.h>

#include <set>

#include "circdlp/circulant.hpp"
#include "circdlp/rng.hpp"
#include "oracles.hpp"

using namespace circdlp;

TEST_SUITE_BEGIN("circulant");

TEST_CASE("shift matrix W") {
  FieldSpec f2 = FieldSpec::binary(1);
  Circulant w = Circulant::shift(f2, 5);
  CHECK(w.row_values() == std::vector<std::uint64_t>{0, 1, 0, 0, 0});
  CHECK(w.pow(5) == Circulant::identity(f2, 5));
  CHECK(w.pow(1) == w);
  CHECK_THROWS_AS(Circulant::shift(f2, 1), DimensionError);
}

TEST_CASE("W^d = I with d minimal, exhaustively") {
  FieldSpec f2 = FieldSpec::binary(1);
  for (unsigned d = 2; d <= 12; ++d) {
    Circulant w = Circulant::shift(f2, d);
    Circulant ident = Circulant::identity(f2, d);
    Circulant acc = w;
    for (unsigned j = 1; j < d; ++j) {
      REQUIRE(acc != ident);
      acc = acc * w;
    }
    REQUIRE(acc == ident);
  }
}

TEST_CASE("expansion rows are right circular shifts") {
  FieldSpec f8 = FieldSpec::binary(3);
  Rng rng(5);
  Circulant a = random_circulant(f8, 5, rng);
  Matrix m = a.expand();
  // row 1 of circ(c0..c4) is (c4, c0, c1, c2, c3)
  CHECK(m.at(1, 0) == a.at(4));
  CHECK(m.at(1, 1) == a.at(0));
  CHECK(m.at(1, 4) == a.at(3));
  // every row is the shift of the previous one; diagonals constant
  for (unsigned i = 1; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) REQUIRE(m.at(i, j) == m.at(i - 1, (j + 4) % 5));

  CHECK(Circulant::identity(f8, 4).expand() == Matrix::identity(f8, 4));

  // circ(0,1,0) expands to the 3-cycle permutation matrix
  FieldSpec f2 = FieldSpec::binary(1);
  Matrix cycle = Circulant::shift(f2, 3).expand();
  CHECK(cycle.at(0, 1).is_one());
  CHECK(cycle.at(1, 2).is_one());
  CHECK(cycle.at(2, 0).is_one());
  CHECK(cycle.at(0, 0).is_zero());
}

TEST_CASE("ring product basics") {
  FieldSpec f2 = FieldSpec::binary(1);
  Rng rng(6);
  Circulant a = random_circulant(f2, 7, rng);
  CHECK(a * Circulant::identity(f2, 7) == a);

  Circulant w3 = Circulant::shift(f2, 3);
  Circulant w3sq = w3 * w3;
  CHECK(w3sq.row_values() == std::vector<std::uint64_t>{0, 0, 1});

  Circulant b = random_circulant(f2, 7, rng);
  CHECK(a * b == b * a);

  CHECK_THROWS_AS(a * random_circulant(f2, 5, rng), DimensionError);
  CHECK_THROWS_AS(a * random_circulant(FieldSpec::binary(2), 7, rng), FieldMismatchError);
}

TEST_CASE("three-way product agreement: convolution, matrix, polynomial") {
  for (const auto& spec : {FieldSpec::binary(1), FieldSpec::binary(4), FieldSpec::prime(7)}) {
    Rng rng(7);
    for (int i = 0; i < 150; ++i) {
      Circulant a = random_circulant(spec, 7, rng);
      Circulant b = random_circulant(spec, 7, rng);
      Circulant conv = a * b;
      REQUIRE(conv == oracles::mul_via_matrix(a, b));
      REQUIRE(conv == oracles::mul_via_poly(a, b));
      REQUIRE(conv == a.mul_generic(b));
    }
  }
}

TEST_CASE("packed F_2 path is bit-identical to the generic path") {
  FieldSpec f2 = FieldSpec::binary(1);
  Rng rng(8);
  for (unsigned d : {2u, 3u, 5u, 11u, 63u, 64u, 65u, 127u, 130u, 1019u}) {
    int reps = d > 200 ? 3 : 40;
    for (int i = 0; i < reps; ++i) {
      Circulant a = random_circulant(f2, d, rng);
      Circulant b = random_circulant(f2, d, rng);
      REQUIRE(a * b == a.mul_generic(b));
    }
  }
}

TEST_CASE("square permutation") {
  CHECK(SquarePermutation(3).table() == std::vector<std::uint32_t>{0, 2, 1});
  CHECK(SquarePermutation(5).table() == std::vector<std::uint32_t>{0, 3, 1, 4, 2});
  CHECK_THROWS_AS(SquarePermutation(4), DimensionError);
  CHECK_THROWS_AS(SquarePermutation(1), DimensionError);
  for (unsigned d : {3u, 7u, 19u, 101u}) {
    SquarePermutation perm(d);
    CHECK(perm[0] == 0);
    std::set<std::uint32_t> seen(perm.table().begin(), perm.table().end());
    REQUIRE(seen.size() == d);  // a permutation
    for (unsigned j = 0; j < d; ++j) REQUIRE(2 * perm[j] % d == j);
  }
}

TEST_CASE("fast squaring equals the ring square") {
  FieldSpec f2 = FieldSpec::binary(1);
  Rng rng(9);

  // closed form at d = 3: circ(a0,a1,a2)^2 = circ(a0^2, a2^2, a1^2)
  for (int i = 0; i < 20; ++i) {
    FieldSpec f16 = FieldSpec::binary(4);
    Circulant a = random_circulant(f16, 3, rng);
    Circulant sq = a.square_char2();
    CHECK(sq.at(0) == a.at(0).square());
    CHECK(sq.at(1) == a.at(2).square());
    CHECK(sq.at(2) == a.at(1).square());
  }

  CHECK(Circulant::identity(f2, 9).square_char2() == Circulant::identity(f2, 9));

  FieldSpec f256 = FieldSpec::binary(8);
  for (int i = 0; i < 300; ++i) {
    Circulant a = random_circulant(f256, 11, rng);
    REQUIRE(a.square_char2() == a * a);
    REQUIRE(a.square_char2() == a.mul_generic(a));
  }

  // hypothesis violations are errors, not fallbacks
  CHECK_THROWS_AS(random_circulant(FieldSpec::prime(3), 5, rng).square_char2(), Error);
  CHECK_THROWS_AS(random_circulant(f2, 4, rng).square_char2(), DimensionError);
}

TEST_CASE("exponentiation") {
  FieldSpec f16 = FieldSpec::binary(4);
  Rng rng(10);
  Circulant a = random_circulant(f16, 7, rng);
  CHECK(a.pow(std::uint64_t{0}) == Circulant::identity(f16, 7));
  CHECK(a.pow(std::uint64_t{1}) == a);
  for (unsigned e : {2u, 3u, 6u, 17u})
    REQUIRE(a.pow(static_cast<std::uint64_t>(e)) == oracles::pow_by_repeated_mul(a, e));

  // a^6 = (a^2) * (a^2) * (a^2)
  Circulant a2 = a * a;
  CHECK(a.pow(std::uint64_t{6}) == a2 * (a2 * a2));

  // BigUint and u64 exponents agree
  CHECK(a.pow(BigUint(12345)) == a.pow(std::uint64_t{12345}));
  // (a^(2^32))^(2^32) = a^(2^64)
  BigUint huge = BigUint::from_hex("10000000000000000");  // 2^64
  Circulant via_chain = a.pow(std::uint64_t{1} << 32).pow(std::uint64_t{1} << 32);
  CHECK(a.pow(huge) == via_chain);

  // odd-characteristic path (no fast squaring)
  FieldSpec f7 = FieldSpec::prime(7);
  Circulant c = random_circulant(f7, 4, rng);
  for (unsigned e : {2u, 5u, 9u})
    REQUIRE(c.pow(static_cast<std::uint64_t>(e)) == oracles::pow_by_repeated_mul(c, e));
}

TEST_CASE("inverse") {
  FieldSpec f2 = FieldSpec::binary(1);
  for (unsigned d : {3u, 5u, 8u}) {
    Circulant w = Circulant::shift(f2, d);
    Circulant expect = Circulant::zero(f2, d);
    // W^-1 = W^(d-1) = circ(0, ..., 0, 1)
    std::vector<std::uint64_t> row(d, 0);
    row[d - 1] = 1;
    CHECK(w.inverse() == Circulant(f2, d, row));
  }
  CHECK(Circulant::identity(f2, 6).inverse() == Circulant::identity(f2, 6));

  Circulant a(f2, 5, {1, 1, 0, 1, 0});
  CHECK(a.is_unit());
  CHECK(a * a.inverse() == Circulant::identity(f2, 5));

  // non-unit: psi itself at d = 3 (gcd = x^2 + x + 1)
  Circulant nonunit(f2, 3, {1, 1, 1});
  CHECK(!nonunit.is_unit());
  try {
    (void)nonunit.inverse();
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& e) {
    CHECK(e.gcd() == "x^2 + x + 1");
  }

  // random units invert; non-units error exactly when det says singular
  Rng rng(11);
  FieldSpec f4 = FieldSpec::binary(2);
  for (int i = 0; i < 300; ++i) {
    Circulant c = random_circulant(f4, 6, rng);
    bool singular_by_elimination = c.det().is_zero();
    if (c.is_unit()) {
      REQUIRE(!singular_by_elimination);
      REQUIRE(c * c.inverse() == Circulant::identity(f4, 6));
    } else {
      REQUIRE(singular_by_elimination);
      REQUIRE_THROWS_AS(c.inverse(), NotInvertibleError);
    }
  }
}

TEST_CASE("row sum") {
  FieldSpec f2 = FieldSpec::binary(1);
  CHECK(Circulant::identity(f2, 5).row_sum().is_one());
  CHECK(Circulant(f2, 3, {1, 1, 1}).row_sum().is_one());

  FieldSpec f16 = FieldSpec::binary(4);
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Circulant a = random_circulant(f16, 9, rng);
    Circulant b = random_circulant(f16, 9, rng);
    REQUIRE((a * b).row_sum() == a.row_sum() * b.row_sum());
    REQUIRE(a.row_sum() == a.representer().eval(f16.one()));
  }
  // row_sum(a^m) = row_sum(a)^m
  Circulant a = random_circulant(f16, 9, rng);
  for (std::uint64_t m : {0ull, 1ull, 7ull, 40ull})
    REQUIRE(a.pow(m).row_sum() == a.row_sum().pow(m));
}

TEST_CASE("determinant") {
  FieldSpec f2 = FieldSpec::binary(1);
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(Circulant::identity(f2, 7).det().is_one());
  CHECK(Circulant::identity(f3, 4).det().is_one());

  // W at odd d is an even permutation: det 1; at even d det -1
  for (unsigned d : {3u, 5u, 9u}) CHECK(Circulant::shift(f3, d).det().is_one());
  CHECK(Circulant::shift(f3, 4).det() == f3.element(2));

  Rng rng(13);
  for (const auto& spec : {FieldSpec::binary(4), FieldSpec::prime(3)}) {
    for (int i = 0; i < 100; ++i) {
      Circulant a = random_circulant(spec, 5, rng);
      Circulant b = random_circulant(spec, 5, rng);
      REQUIRE((a * b).det() == a.det() * b.det());
    }
  }

  // packed F_2 elimination agrees with the generic path on a wider field view
  for (int i = 0; i < 100; ++i) {
    Circulant a = random_circulant(f2, 9, rng);
    FieldElement d2 = a.det();
    REQUIRE((d2.is_zero() || d2.is_one()));
    REQUIRE(d2.is_zero() == !a.is_unit());
  }
}

TEST_CASE("crt split and lift") {
  FieldSpec f2 = FieldSpec::binary(1);
  Poly psi3(f2, {1, 1, 1});

  // phi = x^2 + x + 1 at d = 3: phi(1) = 1, phi mod psi = 0
  Circulant phi(f2, 3, {1, 1, 1});
  CrtPair split = phi.crt_split(psi3);
  CHECK(split.at_one().is_one());
  CHECK(split.residue().is_zero());

  CHECK(Circulant::identity(f2, 3).crt_split(psi3) == CrtPair(f2.one(), Poly::one(f2)));

  // the idempotent: e = 0 mod (x-1), e = 1 mod psi
  Circulant e = Circulant::crt_lift(CrtPair(f2.zero(), Poly::one(f2)), 3, psi3);
  CHECK(e * e == e);
  CHECK(e.row_sum().is_zero());
  CHECK((e.representer() % psi3).is_one());

  // lift(1,1) = identity
  CHECK(Circulant::crt_lift(CrtPair(f2.one(), Poly::one(f2)), 3, psi3) ==
        Circulant::identity(f2, 3));

  // round trip + multiplicativity
  for (const auto& spec : {FieldSpec::binary(1), FieldSpec::binary(4), FieldSpec::prime(7)}) {
    unsigned d = 5;
    Poly psi(spec, std::vector<std::uint64_t>(d, 1));
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
      Circulant a = random_circulant(spec, d, rng);
      Circulant b = random_circulant(spec, d, rng);
      CrtPair sa = a.crt_split(psi);
      CrtPair sb = b.crt_split(psi);
      REQUIRE(Circulant::crt_lift(sa, d, psi) == a);
      CrtPair sab = (a * b).crt_split(psi);
      REQUIRE(sab.at_one() == sa.at_one() * sb.at_one());
      REQUIRE(sab.residue() == sa.residue() * sb.residue() % psi);
    }
  }

  // inseparable: p | d
  CHECK_THROWS_AS(Circulant(f2, 4, {1, 0, 1, 0}).crt_split(Poly(f2, {1, 1, 1, 1})),
                  InseparableModulusError);
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK_THROWS_AS(Circulant::identity(f3, 3).crt_split(Poly(f3, {1, 1, 1})),
                  InseparableModulusError);
}

TEST_CASE("serialization") {
  FieldSpec f16 = FieldSpec::binary(4);
  Circulant a(f16, 3, {5, 0, 9});
  Bytes b = a.to_bytes();
  REQUIRE(b == Bytes{0, 0, 0, 3, 5, 0, 9});
  CHECK(Circulant::from_bytes(f16, b) == a);
  CHECK(a.to_hex() == "00000003050009");
  CHECK(Circulant::from_hex(f16, a.to_hex()) == a);
  CHECK(a.to_display() == "circ(5,0,9)");

  Rng rng(15);
  for (const auto& spec : {FieldSpec::binary(13), FieldSpec::prime(1009)}) {
    for (int i = 0; i < 50; ++i) {
      Circulant c = random_circulant(spec, 11, rng);
      REQUIRE(Circulant::from_bytes(spec, c.to_bytes()) == c);
    }
  }

  Bytes truncated = a.to_bytes();
  truncated.pop_back();
  CHECK_THROWS_AS(Circulant::from_bytes(f16, truncated), ParseError);
}

TEST_SUITE_END();
