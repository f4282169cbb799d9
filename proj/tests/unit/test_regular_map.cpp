#include <doctest.h>

#include <map>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"
#include "csl/perm_action.hpp"
#include "csl/regular_map.hpp"

using csl::Field;

namespace {

struct Expected {
  int n, V, E, F, genus, vertex_degree;
};

// Frozen from tests/oracles/map_oracle.py (independent orbit count).
const Expected kExpected[] = {
    {4, 4, 6, 4, 0, 3},      {5, 5, 10, 5, 1, 4},     {7, 14, 21, 7, 1, 3},
    {8, 8, 28, 8, 7, 7},     {9, 9, 36, 9, 10, 8},    {11, 22, 55, 11, 12, 5},
    {13, 13, 78, 13, 27, 12},
};

}  // namespace

TEST_CASE("genus formula") {
  CHECK(csl::genus_formula(5) == 1);
  CHECK(csl::genus_formula(7) == 1);
  CHECK(csl::genus_formula(9) == 10);
  CHECK(csl::genus_formula(8) == 7);
  CHECK(csl::genus_formula(11) == 12);
  CHECK(csl::genus_formula(13) == 27);
  CHECK(csl::genus_formula(4) == 0);
  CHECK_THROWS_AS(csl::genus_formula(6), csl::Error);
  CHECK_THROWS_AS(csl::genus_formula(3), csl::Error);
  CHECK_THROWS_AS(csl::genus_formula(1), csl::Error);
}

TEST_CASE("Biggs maps match the orbit oracle") {
  for (const auto& e : kExpected) {
    CAPTURE(e.n);
    const auto map = csl::biggs_map(Field::of_order(e.n));
    const auto s = csl::map_summary(map);
    CHECK(s.n == e.n);
    CHECK(s.vertices == e.V);
    CHECK(s.edges == e.E);
    CHECK(s.faces == e.F);
    CHECK(s.genus == e.genus);
    REQUIRE(s.formula_genus);
    CHECK(*s.formula_genus == s.genus);
    REQUIRE(s.vertex_degree);
    CHECK(*s.vertex_degree == e.vertex_degree);
    CHECK(s.face_degree == e.n - 1);
    CHECK(s.euler == s.vertices - s.edges + s.faces);
    // Two vertex orbits per label exactly when n = 3 mod 4.
    CHECK(s.vertices == (e.n % 4 == 3 ? 2 * e.n : e.n));
  }
}

TEST_CASE("vertex degree is the order of -omega") {
  for (int n : {5, 7, 8, 9, 11, 13}) {
    const auto f = Field::of_order(n);
    const auto s = csl::map_summary(csl::biggs_map(f));
    CHECK(*s.vertex_degree == f.multiplicative_order(f.neg(f.primitive_index())));
  }
}

TEST_CASE("map construction errors") {
  CHECK_THROWS_AS(csl::biggs_map(Field(3, 1)), csl::Error);
  CHECK_THROWS_AS(csl::biggs_map(Field(5, 1), 4), csl::Error);  // 4 has order 2
  CHECK_THROWS_AS(csl::RotationMap(csl::Permutation::identity(2), csl::Permutation::identity(2)),
                  csl::Error);
}

TEST_CASE("affine automorphisms") {
  const Field f(5, 1);
  const auto map = csl::biggs_map(f);

  const auto id = csl::affine_map_automorphism(map, f, 1, 0);
  CHECK(id.is_identity());

  const auto shift = csl::affine_map_automorphism(map, f, 1, 1);
  CHECK(csl::is_map_automorphism(map, shift));
  CHECK(map.alpha().then(shift) == shift.then(map.alpha()));
  const auto shift_faces = csl::induced_face_permutation(map, shift);
  CHECK(shift_faces.cycle_string() == "(1 2 3 4 5)");

  const auto scale = csl::affine_map_automorphism(map, f, 2, 0);
  const auto scale_faces = csl::induced_face_permutation(map, scale);
  CHECK(scale_faces(0) == 0);
  REQUIRE(scale_faces.cycles().size() == 1);
  CHECK(scale_faces.cycles()[0].size() == 4);

  CHECK_THROWS_AS(csl::affine_map_automorphism(map, f, 0, 1), csl::Error);
  CHECK_THROWS_AS(csl::affine_map_automorphism(map, Field(7, 1), 1, 1), csl::Error);
}

TEST_CASE("every affine pair is an automorphism inducing the affine action") {
  for (int n : {5, 7, 8}) {
    CAPTURE(n);
    const auto f = Field::of_order(n);
    const auto map = csl::biggs_map(f);
    int checked = 0;
    for (int s = 1; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        const auto g = csl::affine_map_automorphism(map, f, s, t);
        REQUIRE(csl::is_map_automorphism(map, g));
        REQUIRE(csl::induced_face_permutation(map, g) == csl::affine_permutation(f, s, t));
        ++checked;
      }
    CHECK(checked == n * (n - 1));
  }
}

TEST_CASE("face adjacency") {
  CHECK(csl::face_adjacency_complete(csl::biggs_map(Field(5, 1))));
  CHECK(csl::face_adjacency_complete(csl::biggs_map(Field(2, 3))));

  // Two digons glued along both edges: a sphere whose faces share two edges.
  // Darts 0,1 bound face A; darts 2,3 bound face B; edges {0,2} and {1,3}.
  const csl::RotationMap pillow(csl::Permutation({2, 3, 0, 1}), csl::Permutation({1, 0, 3, 2}));
  const auto adj = csl::face_adjacency(pillow);
  CHECK(adj[0][1] == 2);
  CHECK_FALSE(csl::face_adjacency_complete(pillow));
  CHECK(csl::map_summary(pillow).genus == 0);
  CHECK_FALSE(csl::map_summary(pillow).formula_genus.has_value());
}

TEST_CASE("disconnected maps are rejected") {
  const csl::RotationMap two(csl::Permutation({1, 0, 3, 2}), csl::Permutation::identity(4));
  CHECK_THROWS_AS(csl::map_summary(two), csl::Error);
}
