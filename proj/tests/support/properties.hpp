// Randomized invariants over small instances, shared by the unit suite and
// the acceptance runner. Seeds are fixed so failures reproduce.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "csl/finite_field.hpp"
#include "csl/perm_action.hpp"
#include "csl/regular_map.hpp"
#include "csl/train_track.hpp"

namespace props {

struct Tally {
  int cases = 0;
  int failures = 0;
};

inline csl::Permutation random_perm(std::mt19937& rng, std::size_t d) {
  std::vector<std::uint32_t> im(d);
  std::iota(im.begin(), im.end(), 0u);
  std::shuffle(im.begin(), im.end(), rng);
  return csl::Permutation(std::move(im));
}

inline csl::PermGroup random_group(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> deg(1, 6);
  std::uniform_int_distribution<int> ngen(1, 3);
  const auto d = deg(rng);
  std::vector<csl::Permutation> gens;
  for (int i = ngen(rng); i > 0; --i) {
    // Bias towards sparse permutations so that small subgroups appear.
    if (rng() % 2) {
      auto im = std::vector<std::uint32_t>(d);
      std::iota(im.begin(), im.end(), 0u);
      if (d > 1) std::swap(im[rng() % d], im[rng() % d]);
      gens.emplace_back(std::move(im));
    } else {
      gens.push_back(random_perm(rng, d));
    }
  }
  return csl::PermGroup::closure(std::move(gens));
}

inline std::uint64_t factorial(std::uint64_t d) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= d; ++i) f *= i;
  return f;
}

// Group axioms, orbit-stabilizer divisibility and the transitivity hierarchy.
inline Tally group_suite(int cases, std::uint32_t seed = 20240601) {
  std::mt19937 rng(seed);
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto g = random_group(rng);
    const auto d = g.degree();
    bool ok = factorial(d) % g.order() == 0;

    // Closure under composition and inverse, sampled.
    for (int s = 0; s < 5 && ok; ++s) {
      const auto& a = g.elements()[rng() % g.order()];
      const auto& b = g.elements()[rng() % g.order()];
      ok = g.contains(a.then(b)) && g.contains(a.inverse());
    }
    for (std::uint32_t x = 0; x < d && ok; ++x) ok = g.order() % g.orbit(x).size() == 0;
    for (std::size_t k = 1; k <= d && ok; ++k) ok = g.order() % g.tuple_orbit_size(k) == 0;

    const auto deg = csl::transitivity_degree(g);
    for (std::size_t k = 1; k <= d && ok; ++k) ok = csl::is_k_transitive(g, k) == (k <= deg);
    if (d <= 5 && ok)
      for (std::size_t k = 1; k <= std::min<std::size_t>(d, 3) && ok; ++k)
        ok = csl::is_k_transitive(g, k) == csl::is_k_transitive_literal(g, k);
    ++t.cases;
    if (!ok) ++t.failures;
  }
  return t;
}

// Rotation maps over random fields and primitive elements, with random affine
// automorphisms.
inline Tally rotation_map_suite(int cases, std::uint32_t seed = 77) {
  std::mt19937 rng(seed);
  const int orders[] = {4, 5, 7, 8, 9, 11, 13};
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const int n = orders[rng() % 7];
    const auto field = csl::Field::of_order(n);
    std::vector<int> generators;
    for (int a = 1; a < n; ++a)
      if (field.multiplicative_order(a) == n - 1) generators.push_back(a);
    const int omega = generators[rng() % generators.size()];
    const auto map = csl::biggs_map(field, omega);

    bool ok = true;
    const auto& alpha = map.alpha();
    for (std::uint32_t d = 0; d < map.dart_count() && ok; ++d) ok = alpha(d) != d && alpha(alpha(d)) == d;
    const auto faces = map.faces();
    ok = ok && faces.size() == static_cast<std::size_t>(n);
    for (const auto& f : faces) ok = ok && f.size() == static_cast<std::size_t>(n - 1);
    ok = ok && csl::face_adjacency_complete(map);
    const auto s = csl::map_summary(map);
    ok = ok && s.genus == csl::genus_formula(n) && s.vertex_degree.has_value();

    const int sc = 1 + static_cast<int>(rng() % (n - 1));
    const int tr = static_cast<int>(rng() % n);
    const auto g = csl::affine_map_automorphism(map, field, sc, tr);
    ok = ok && csl::is_map_automorphism(map, g) &&
         csl::induced_face_permutation(map, g) == csl::affine_permutation(field, sc, tr);
    ++t.cases;
    if (!ok) ++t.failures;
  }
  return t;
}

// Perron eigenpairs of random primitive matrices: positive, converged, and
// shared with the transpose.
inline Tally perron_suite(int cases, std::uint32_t seed = 4242) {
  std::mt19937 rng(seed);
  Tally t;
  while (t.cases < cases) {
    const std::size_t d = 1 + rng() % 5;
    csl::TransitionMatrix m;
    for (std::size_t i = 0; i < d; ++i) m.labels.push_back(std::to_string(i));
    m.entries.assign(d, std::vector<std::int64_t>(d, 0));
    for (auto& row : m.entries)
      for (auto& x : row) x = rng() % 3 == 0 ? 0 : static_cast<std::int64_t>(rng() % 6);
    if (!csl::is_primitive(m)) continue;
    ++t.cases;
    const auto r = csl::perron_eigen(m, 1e-10);
    bool ok = r.lambda > 0;
    double vmax = 0;
    for (double v : r.vector) {
      ok = ok && v > 0;
      vmax = std::max(vmax, v);
    }
    ok = ok && r.residual <= 1e-10 * vmax * 1.0000001;
    const auto rt = csl::perron_eigen(m.transposed(), 1e-10);
    ok = ok && std::abs(rt.lambda - r.lambda) <= 1e-8 * r.lambda;
    if (!ok) ++t.failures;
  }
  return t;
}

}  // namespace props
