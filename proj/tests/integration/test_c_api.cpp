#include <doctest.h>

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "csl/csl.h"

using Json = nlohmann::json;

namespace {

template <class F>
std::string text_of(F&& call) {
  size_t needed = 0;
  REQUIRE(call(nullptr, 0, &needed) == CSL_OK);
  std::string s(needed, '\0');
  REQUIRE(call(s.data(), s.size(), &needed) == CSL_OK);
  s.resize(needed - 1);
  return s;
}

struct Field {
  csl_field* f = nullptr;
  explicit Field(int n) { REQUIRE(csl_field_create_order(n, &f) == CSL_OK); }
  ~Field() { csl_field_destroy(f); }
};

struct Map {
  csl_map* m = nullptr;
  explicit Map(const Field& field) { REQUIRE(csl_biggs_map_create(field.f, &m) == CSL_OK); }
  ~Map() { csl_map_destroy(m); }
};

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(csl_version()) == "0.1.0");
  CHECK(std::string(csl_status_string(CSL_OK)) == "ok");
  CHECK(std::string(csl_status_string(CSL_ERR_NOT_PRIME_POWER)) == "not a prime power");
  CHECK(std::string(csl_status_string(static_cast<csl_status>(57))) == "unknown status");
}

TEST_CASE("field creation errors carry a message") {
  csl_field* f = nullptr;
  CHECK(csl_field_create(6, 1, &f) == CSL_ERR_NOT_PRIME);
  CHECK(f == nullptr);
  CHECK(std::strlen(csl_last_error()) > 0);
  CHECK(csl_field_create_order(12, &f) == CSL_ERR_NOT_PRIME_POWER);
  CHECK(csl_field_create_order(5, nullptr) == CSL_ERR_INVALID_ARGUMENT);
  csl_field_destroy(nullptr);
  CHECK(csl_field_order(nullptr) == 0);
}

TEST_CASE("last error is per thread") {
  csl_field* f = nullptr;
  CHECK(csl_field_create_order(6, &f) != CSL_OK);
  const std::string here = csl_last_error();
  std::string there = "unset";
  std::thread([&] { there = csl_last_error(); }).join();
  CHECK_FALSE(here.empty());
  CHECK(there.empty());
}

TEST_CASE("field arithmetic over GF(9)") {
  Field F(9);
  CHECK(csl_field_order(F.f) == 9);
  auto modulus = text_of([&](char* b, size_t c, size_t* n) { return csl_field_modulus(F.f, b, c, n); });
  CHECK(modulus == "1,0,1");  // x^2 + 1

  // (1+x)^2 = 1 + 2x + x^2 = 2x with x^2 = -1.
  auto sq = text_of([&](char* b, size_t c, size_t* n) { return csl_field_mul(F.f, "1,1", "1,1", b, c, n); });
  CHECK(sq == "0,2");
  auto sum = text_of([&](char* b, size_t c, size_t* n) { return csl_field_add(F.f, "2,1", "2,2", b, c, n); });
  CHECK(sum == "1,0");
  auto prim = text_of([&](char* b, size_t c, size_t* n) { return csl_field_primitive(F.f, b, c, n); });
  CHECK(prim == "1,1");

  int idx = -1;
  CHECK(csl_field_index(F.f, "1,2", &idx) == CSL_OK);
  CHECK(idx == 1 + 2 * 3);
  CHECK(csl_field_index(F.f, "1,2,0", &idx) != CSL_OK);
  CHECK(csl_field_index(F.f, "3,0", &idx) != CSL_OK);
}

TEST_CASE("text buffer protocol") {
  Field F(8);
  size_t needed = 0;
  CHECK(csl_field_modulus(F.f, nullptr, 0, &needed) == CSL_OK);
  CHECK(needed == std::string("1,1,0,1").size() + 1);
  char small[4];
  CHECK(csl_field_modulus(F.f, small, sizeof small, &needed) == CSL_ERR_BUFFER_TOO_SMALL);
  CHECK(needed == 8);
  char exact[8];
  CHECK(csl_field_modulus(F.f, exact, sizeof exact, &needed) == CSL_OK);
  CHECK(std::string(exact) == "1,1,0,1");
}

TEST_CASE("groups from explicit generators") {
  // transposition and 4-cycle generate S4
  const std::vector<uint32_t> images{1, 0, 2, 3, 1, 2, 3, 0};
  csl_group* g = nullptr;
  REQUIRE(csl_group_create(4, images.data(), 2, &g) == CSL_OK);
  uint64_t order = 0;
  CHECK(csl_group_order(g, &order) == CSL_OK);
  CHECK(order == 24);
  CHECK(csl_group_degree(g) == 4);
  size_t deg = 0;
  CHECK(csl_group_transitivity_degree(g, &deg) == CSL_OK);
  CHECK(deg == 4);
  int yes = -1;
  CHECK(csl_group_is_k_transitive(g, 4, &yes) == CSL_OK);
  CHECK(yes == 1);
  const Json j = Json::parse(text_of([&](char* b, size_t c, size_t* n) { return csl_group_json(g, b, c, n); }));
  CHECK(j["order"] == 24);
  CHECK(j["degree"] == 4);
  csl_group_destroy(g);

  const std::vector<uint32_t> bad{0, 0, 1};
  CHECK(csl_group_create(3, bad.data(), 1, &g) == CSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("group cap is honoured and restorable") {
  const uint64_t saved = csl_get_group_cap();
  csl_set_group_cap(10);
  const std::vector<uint32_t> images{1, 0, 2, 3, 1, 2, 3, 0};
  csl_group* g = nullptr;
  CHECK(csl_group_create(4, images.data(), 2, &g) == CSL_ERR_CAP_EXCEEDED);
  csl_set_group_cap(saved);
  CHECK(csl_get_group_cap() == saved);
}

TEST_CASE("affine groups are sharply 2-transitive") {
  for (int n : {4, 5, 7, 8, 9}) {
    Field F(n);
    csl_group* g = nullptr;
    REQUIRE(csl_affine_group_create(F.f, &g) == CSL_OK);
    uint64_t order = 0;
    csl_group_order(g, &order);
    CHECK(order == static_cast<uint64_t>(n * (n - 1)));
    int two = 0;
    int three = 1;
    csl_group_is_k_transitive(g, 2, &two);
    csl_group_is_k_transitive(g, 3, &three);
    CHECK(two == 1);
    CHECK(three == 0);
    csl_group_destroy(g);
  }
}

TEST_CASE("map summaries agree with the independent oracle") {
  // (n, V, E, F, genus, vertex degree) from an independent rotation-system
  // construction.
  const int expected[][6] = {{4, 4, 6, 4, 0, 3},     {5, 5, 10, 5, 1, 4},   {7, 14, 21, 7, 1, 3},
                             {8, 8, 28, 8, 7, 7},    {9, 9, 36, 9, 10, 8},  {11, 22, 55, 11, 12, 5},
                             {13, 13, 78, 13, 27, 12}};
  for (const auto& row : expected) {
    Field F(row[0]);
    Map M(F);
    csl_map_summary s{};
    REQUIRE(csl_map_get_summary(M.m, &s) == CSL_OK);
    CHECK(s.n == row[0]);
    CHECK(s.vertices == row[1]);
    CHECK(s.edges == row[2]);
    CHECK(s.faces == row[3]);
    CHECK(s.genus == row[4]);
    CHECK(s.vertex_degree == row[5]);
    CHECK(s.euler == s.vertices - s.edges + s.faces);
    int formula = -1;
    CHECK(csl_genus_formula(row[0], &formula) == CSL_OK);
    CHECK(formula == row[4]);
    CHECK(s.formula_genus == formula);
    int complete = 0;
    CHECK(csl_map_face_adjacency_complete(M.m, &complete) == CSL_OK);
    CHECK(complete == 1);
  }
  int out = 0;
  CHECK(csl_genus_formula(3, &out) != CSL_OK);
}

TEST_CASE("affine automorphisms over a prime field act on faces as x -> sx + t") {
  const int n = 7;
  Field F(n);
  Map M(F);
  for (int s = 1; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int is_auto = 0;
      std::vector<uint32_t> faces(n);
      REQUIRE(csl_map_affine_automorphism(M.m, F.f, s, t, &is_auto, faces.data()) == CSL_OK);
      CHECK(is_auto == 1);
      for (int x = 0; x < n; ++x) CHECK(faces[x] == static_cast<uint32_t>((s * x + t) % n));
    }
  int is_auto = 0;
  CHECK(csl_map_affine_automorphism(M.m, F.f, 0, 1, &is_auto, nullptr) != CSL_OK);
  CHECK(csl_map_affine_automorphism(M.m, F.f, 1, 7, &is_auto, nullptr) == CSL_ERR_OUT_OF_RANGE);

  Field G(5);
  CHECK(csl_map_affine_automorphism(M.m, G.f, 1, 1, &is_auto, nullptr) == CSL_ERR_MISMATCHED_FIELD);
}

TEST_CASE("map json and dot") {
  Field F(5);
  Map M(F);
  const Json j = Json::parse(text_of([&](char* b, size_t c, size_t* n) { return csl_map_json(M.m, b, c, n); }));
  CHECK(j["genus"] == 1);
  CHECK(j["match"] == true);
  const auto faces = text_of([&](char* b, size_t c, size_t* n) { return csl_map_dot(M.m, 0, b, c, n); });
  CHECK(faces.rfind("graph faces {", 0) == 0);
  // complete graph on 5 faces: 10 edges
  size_t edges = 0;
  for (size_t p = faces.find("--"); p != std::string::npos; p = faces.find("--", p + 2)) ++edges;
  CHECK(edges == 10);
  const auto darts = text_of([&](char* b, size_t c, size_t* n) { return csl_map_dot(M.m, 1, b, c, n); });
  CHECK(darts.rfind("digraph darts {", 0) == 0);
  size_t needed = 0;
  CHECK(csl_map_dot(M.m, 2, nullptr, 0, &needed) == CSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("braid permutation and closures") {
  const int word[] = {1, 3, -2, -4};
  std::vector<uint32_t> images(5);
  REQUIRE(csl_braid_permutation(5, word, 4, images.data()) == CSL_OK);
  // (1 3 5 4 2) in 1-based cycle notation
  CHECK(images == std::vector<uint32_t>{2, 0, 4, 1, 3});

  csl_link* link = nullptr;
  REQUIRE(csl_link_braid_closure(5, word, 4, 1, &link) == CSL_OK);
  CHECK(csl_link_component_count(link) == 5);
  csl_link_destroy(link);

  const int split[] = {1, 3};
  CHECK(csl_link_braid_closure(5, split, 2, 1, &link) == CSL_ERR_NOT_CYCLIC);
  CHECK(csl_braid_permutation(5, word, 4, nullptr) == CSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("link families through the C interface") {
  struct Expect {
    csl_status (*make)(csl_link**);
    size_t components;
    uint64_t order;
    size_t degree;
  };
  const Expect cases[] = {{csl_link_cube, 4, 24, 4},
                          {csl_link_cube_edge, 12, 24, 1},
                          {csl_link_icosahedral, 6, 60, 2}};
  for (const auto& e : cases) {
    csl_link* link = nullptr;
    REQUIRE(e.make(&link) == CSL_OK);
    CHECK(csl_link_component_count(link) == e.components);
    csl_group* g = nullptr;
    REQUIRE(csl_link_symmetry_group(link, &g) == CSL_OK);
    uint64_t order = 0;
    csl_group_order(g, &order);
    CHECK(order == e.order);
    size_t deg = 0;
    csl_group_transitivity_degree(g, &deg);
    CHECK(deg == e.degree);
    const Json j = Json::parse(text_of([&](char* b, size_t c, size_t* n) { return csl_link_json(link, b, c, n); }));
    CHECK(j["checks"]["linking_well_formed"] == true);
    CHECK(j["checks"]["symmetry_preserves_linking"] == true);
    csl_group_destroy(g);
    csl_link_destroy(link);
  }

  csl_link* chain = nullptr;
  REQUIRE(csl_link_chain(6, 0, &chain) == CSL_OK);
  const Json cj = Json::parse(text_of([&](char* b, size_t c, size_t* n) { return csl_link_json(chain, b, c, n); }));
  CHECK(cj["transitivity_degree"] == 1);
  CHECK(cj["hyperbolicity"] == "asserted");
  csl_link_destroy(chain);
  CHECK(csl_link_chain(1, 0, &chain) == CSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("helical links carry their geometric data") {
  Field F(7);
  csl_link* link = nullptr;
  REQUIRE(csl_link_helical(F.f, &link) == CSL_OK);
  const Json j = Json::parse(text_of([&](char* b, size_t c, size_t* n) { return csl_link_json(link, b, c, n); }));
  CHECK(j["n_components"] == 7);
  CHECK(j["linking"] == "complete");
  CHECK(j["transitivity_degree"] == 2);
  CHECK(j["symmetry_order"] == 42);
  CHECK(j["helical"]["torus_knot"] == Json::array({6, 1}));
  csl_link_destroy(link);
}

TEST_CASE("polygon radii") {
  double r1 = 0;
  double r2 = 0;
  int hyperbolic = -1;
  REQUIRE(csl_polygon_radii(4, 4, &r1, &r2, &hyperbolic) == CSL_OK);
  CHECK(r1 == doctest::Approx(0.5));
  CHECK(r2 == doctest::Approx(std::sqrt(0.5)));
  CHECK(hyperbolic == 0);
  REQUIRE(csl_polygon_radii(6, 4, &r1, &r2, &hyperbolic) == CSL_OK);
  CHECK(hyperbolic == 1);
  CHECK(0 < r1);
  CHECK(r1 < r2);
  CHECK(csl_polygon_radii(3, 3, &r1, &r2, nullptr) == CSL_ERR_SPHERICAL);
}

TEST_CASE("perron eigen-system via the C interface") {
  const int64_t m[] = {3, 4, 2, 3};
  double lambda = 0;
  double v[2] = {0, 0};
  REQUIRE(csl_perron_eigen(m, 2, 1e-13, &lambda, v) == CSL_OK);
  CHECK(std::abs(lambda - (3 + 2 * std::sqrt(2.0))) < 1e-12);
  CHECK(std::abs(v[0] / v[1] - std::sqrt(2.0)) < 1e-12);

  // a 3x3 matrix whose spectral radius is known in closed form: the all-ones
  // matrix has eigenvalue 3 with eigenvector (1,1,1)
  const int64_t ones[] = {1, 1, 1, 1, 1, 1, 1, 1, 1};
  double w[3];
  REQUIRE(csl_perron_eigen(ones, 3, 1e-13, &lambda, w) == CSL_OK);
  CHECK(lambda == doctest::Approx(3.0).epsilon(1e-12));

  const int64_t reducible[] = {1, 0, 0, 1};
  CHECK(csl_perron_eigen(reducible, 2, 1e-13, &lambda, v) == CSL_ERR_NOT_PRIMITIVE);
  const int64_t negative[] = {1, -1, 1, 1};
  CHECK(csl_perron_eigen(negative, 2, 1e-13, &lambda, v) != CSL_OK);
}

TEST_CASE("dilatation report") {
  csl_dilatation_report r{};
  REQUIRE(csl_dilatation(1e-13, &r) == CSL_OK);
  const double exact = 3 + 2 * std::sqrt(2.0);
  CHECK(std::abs(r.lambda - exact) < 1e-12);
  CHECK(std::abs(r.lambda_inverse - 1.0 / exact) < 1e-12);
  CHECK(std::abs(r.w / r.z - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(r.w_tilde / r.z_tilde - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK(r.residual_ab_cd < 1e-12);
  CHECK(r.residual_df_ef < 1e-12);
  CHECK(r.residual_combined < 1e-12);
  CHECK(std::abs(r.lambda_transpose - r.lambda) < 2e-13);

  const Json j = Json::parse(text_of([](char* b, size_t c, size_t* n) { return csl_dilatation_json(1e-13, b, c, n); }));
  CHECK(std::abs(j["lambda"].get<double>() - exact) < 1e-12);
  for (const auto& [k, v] : j["residuals"].items()) CHECK_MESSAGE(v.get<double>() < 1e-12, k);

  const auto dot = text_of([](char* b, size_t c, size_t* n) { return csl_substitution_dot(b, c, n); });
  CHECK(dot.find("digraph substitution") == 0);
}

TEST_CASE("census json") {
  const Json rows = Json::parse(text_of([](char* b, size_t c, size_t* n) { return csl_census_json(4, 13, b, c, n); }));
  std::vector<int> ns;
  for (const auto& r : rows) {
    ns.push_back(r["n"]);
    CHECK(r["cusps"] == r["n"]);
    CHECK(r["two_transitive"] == true);
    CHECK(r["complete_linking"] == true);
  }
  CHECK(ns == std::vector<int>{4, 5, 7, 8, 9, 11, 13});
  const Json empty = Json::parse(text_of([](char* b, size_t c, size_t* n) { return csl_census_json(14, 15, b, c, n); }));
  CHECK(empty.empty());
}

TEST_CASE("null handles are rejected") {
  size_t needed = 0;
  csl_map_summary s{};
  CHECK(csl_map_get_summary(nullptr, &s) == CSL_ERR_INVALID_ARGUMENT);
  CHECK(csl_link_json(nullptr, nullptr, 0, &needed) == CSL_ERR_INVALID_ARGUMENT);
  CHECK(csl_group_json(nullptr, nullptr, 0, &needed) == CSL_ERR_INVALID_ARGUMENT);
  CHECK(csl_link_component_count(nullptr) == 0);
  CHECK(csl_group_degree(nullptr) == 0);
  csl_map_destroy(nullptr);
  csl_link_destroy(nullptr);
  csl_group_destroy(nullptr);
}
