#include <doctest.h>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"

using csl::Field;
using csl::FieldElement;

TEST_CASE("prime field arithmetic") {
  const Field f(5, 1);
  CHECK(f.order() == 5);
  CHECK(f.spec().modulus == std::vector<int>{0, 1});
  CHECK(f.add(FieldElement{{2}}, FieldElement{{4}}) == FieldElement{{1}});
  CHECK(f.mul(FieldElement{{2}}, FieldElement{{3}}) == FieldElement{{1}});
  CHECK(f.inv(FieldElement{{2}}) == FieldElement{{3}});
  CHECK(f.neg(FieldElement{{2}}) == FieldElement{{3}});
}

TEST_CASE("GF(4) uses x^2 + x + 1") {
  const Field f(2, 2);
  CHECK(f.spec().modulus == std::vector<int>{1, 1, 1});
  const FieldElement x{{0, 1}};
  CHECK(f.mul(x, x) == FieldElement{{1, 1}});
  CHECK(f.to_string(f.mul(x, x)) == "1,1");
}

TEST_CASE("modulus is the smallest irreducible") {
  // Frozen from tests/oracles/map_oracle.py.
  CHECK(Field(2, 3).spec().modulus == std::vector<int>{1, 1, 0, 1});
  CHECK(Field(3, 2).spec().modulus == std::vector<int>{1, 0, 1});
  CHECK(csl::is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(csl::is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
  CHECK_FALSE(csl::is_irreducible({0, 1, 1}, 2));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field(4, 1), csl::Error);
  try {
    Field(4, 1);
  } catch (const csl::Error& e) {
    CHECK(e.code() == csl::ErrorCode::NotPrime);
  }
  CHECK_THROWS_AS(Field(5, 0), csl::Error);
  CHECK_THROWS_AS(Field(2, 7), csl::Error);  // 128 > default cap
  CHECK_NOTHROW(Field(2, 7, 128));
  CHECK_THROWS_AS(Field::of_order(6), csl::Error);
  CHECK(Field::of_order(9).characteristic() == 3);
}

TEST_CASE("mismatched elements are rejected") {
  const Field f(2, 2);
  CHECK_THROWS_AS(f.add(FieldElement{{1}}, FieldElement{{1, 0}}), csl::Error);
  CHECK_THROWS_AS(f.mul(FieldElement{{2, 0}}, FieldElement{{1, 0}}), csl::Error);
  CHECK_THROWS_AS(f.inv(FieldElement{{0, 0}}), csl::Error);
}

TEST_CASE("primitive elements") {
  CHECK(Field(5, 1).primitive() == FieldElement{{2}});
  CHECK(Field(7, 1).primitive() == FieldElement{{3}});
  CHECK(Field(2, 1).primitive() == FieldElement{{1}});
  CHECK(Field(3, 2).primitive() == FieldElement{{1, 1}});

  // Powers of the GF(5) generator run through 2, 4, 3, 1.
  const Field f(5, 1);
  std::vector<int> powers;
  int x = 1;
  for (int i = 0; i < 4; ++i) powers.push_back(x = f.mul(x, f.primitive_index()));
  CHECK(powers == std::vector<int>{2, 4, 3, 1});
}

TEST_CASE("enumeration order") {
  const Field f4(2, 2);
  const auto e = f4.enumerate();
  REQUIRE(e.size() == 4);
  CHECK(e[0] == FieldElement{{0, 0}});
  CHECK(e[1] == FieldElement{{1, 0}});
  CHECK(e[2] == FieldElement{{0, 1}});
  CHECK(e[3] == FieldElement{{1, 1}});
  CHECK(Field(5, 1).enumerate().size() == 5);
  CHECK(Field(3, 2).enumerate().size() == 9);
}

TEST_CASE("string round trip") {
  const Field f(3, 2);
  for (const auto& e : f.enumerate()) CHECK(f.parse(f.to_string(e)) == e);
  CHECK_THROWS_AS(f.parse("1,"), csl::Error);
  CHECK_THROWS_AS(f.parse("1,3"), csl::Error);
  CHECK_THROWS_AS(f.parse("1"), csl::Error);
}

TEST_CASE("field axioms hold exhaustively for every field up to 32") {
  for (int n = 2; n <= 32; ++n) {
    int p = 0;
    int k = 0;
    if (!csl::prime_power_decompose(n, p, k)) continue;
    const Field f(p, k);
    CAPTURE(n);
    for (int a = 0; a < n; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < n; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < n; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) FAIL("add assoc");
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) FAIL("mul assoc");
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) FAIL("distributivity");
        }
      }
    }
    CHECK(f.multiplicative_order(f.primitive_index()) == n - 1);
  }
}
