#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "csl/link_families.hpp"
#include "csl/perm_action.hpp"
#include "csl/regular_map.hpp"
#include "csl/train_track.hpp"

namespace csl {

using Json = nlohmann::ordered_json;

/// Rounds to 15 significant digits so serialized reals are stable text.
double round15(double x);

Json to_json(const Permutation& p);
/// {generators, order, transitivity_degree}
Json to_json(const PermGroup& g);
/// {n, V, E, F, euler, genus, formula_genus, vertex_degree, match}
Json to_json(const MapSummary& s);
/// {family, ambient, n_components, components, linking_kind, linking,
///  crossings, symmetry_generators, symmetry_order, transitivity_degree,
///  hyperbolicity, hyperbolicity_note, params}
Json to_json(const LinkBlueprint& link, std::uint64_t cap = kDefaultGroupCap);
Json to_json(const HelicalSpec& spec);

/// {lambda, lambda_inverse, w, z, w_tilde, z_tilde, residuals{...}}
Json dilatation_report(double tol = kDefaultEigenTolerance);

/// Undirected face-adjacency multigraph; one node per face.
std::string face_adjacency_dot(const RotationMap& map);
/// Darts as nodes with alpha (dashed) and phi (solid) arcs.
std::string dart_dot(const RotationMap& map);
/// Labels as nodes; an edge i -> j with the number of j letters in rule(i).
std::string substitution_dot(const SubstitutionRules& rules);

struct CensusRow {
  int n = 0;
  int cusps = 0;
  bool complete_linking = false;
  std::uint64_t symmetry_order = 0;
  std::size_t transitivity_degree = 0;
  int genus = 0;
};

/// One helical-link row per prime power n in [lo, hi] with n > 3.
std::vector<CensusRow> census(int lo, int hi, std::uint64_t cap = kDefaultGroupCap);
Json to_json(const std::vector<CensusRow>& rows);

}  // namespace csl
