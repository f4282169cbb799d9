#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "csl/perm_action.hpp"

namespace csl {

class Field;

/// Oriented combinatorial map on darts 0..D-1.
///
/// `alpha` pairs the two darts of an edge, `phi` rotates darts around their
/// face. Faces are the cycles of phi, edges the cycles of alpha and vertices
/// the cycles of phi∘alpha (alpha applied first).
class RotationMap {
 public:
  /// Throws Error{InvalidArgument} unless alpha is a fixed-point-free
  /// involution of the same degree as phi.
  RotationMap(Permutation alpha, Permutation phi);

  std::size_t dart_count() const { return alpha_.degree(); }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& phi() const { return phi_; }
  /// d -> phi(alpha(d)).
  Permutation vertex_rotation() const { return alpha_.then(phi_); }

  /// Cycles including singletons, ordered by least dart.
  std::vector<std::vector<std::uint32_t>> faces() const;
  std::vector<std::vector<std::uint32_t>> vertices() const;
  std::vector<std::vector<std::uint32_t>> edges() const;

  /// face_of()[d] is the index (into faces()) of the face containing dart d.
  std::vector<std::uint32_t> face_of() const;

  /// Field order when built by biggs_map, 0 for hand-made maps.
  int label_order() const { return label_order_; }
  /// Face-label pair (a, b) for each dart of a Biggs map.
  const std::vector<std::pair<int, int>>& dart_labels() const { return labels_; }
  std::uint32_t dart_index(int a, int b) const;

 private:
  friend RotationMap biggs_map(const Field& field, int omega);

  Permutation alpha_;
  Permutation phi_;
  int label_order_ = 0;
  std::vector<std::pair<int, int>> labels_;
};

/// Face-labelled regular map of the field: darts (a, b) for a != b, alpha
/// swaps the pair and phi(a, b) = (a, a + omega (b - a)). `omega` must be a
/// generator of the multiplicative group. Requires n > 3.
RotationMap biggs_map(const Field& field, int omega);
/// Same, with omega = the field's least primitive element.
RotationMap biggs_map(const Field& field);

/// Closed-form genus of the order-n member: 1 + n(n-7)/4 when n = 3 mod 4,
/// otherwise 1 + n(n-5)/4. Throws for n not a prime power > 3.
int genus_formula(std::int64_t n);

struct MapSummary {
  int n = 0;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  int genus = 0;
  std::optional<int> formula_genus;
  /// Common vertex-cycle length, or nullopt when the vertices differ.
  std::optional<int> vertex_degree;
  /// Common face length, or nullopt when the faces differ.
  std::optional<int> face_degree;
};

/// Orbit counts, Euler characteristic and genus. Throws
/// Error{InvalidArgument} if the map is disconnected or chi is odd.
MapSummary map_summary(const RotationMap& map);

/// Dart permutation (a, b) -> (s a + t, s b + t) of a Biggs map.
Permutation affine_map_automorphism(const RotationMap& map, const Field& field,
                                    int s, int t);

/// True when `g` commutes with both alpha and phi.
bool is_map_automorphism(const RotationMap& map, const Permutation& g);

/// Face permutation induced by a dart automorphism.
Permutation induced_face_permutation(const RotationMap& map, const Permutation& g);

/// Number of edges shared by each unordered pair of faces; entry [i][i]
/// counts edges with the same face on both sides.
std::vector<std::vector<int>> face_adjacency(const RotationMap& map);

/// True iff every pair of distinct faces shares exactly one edge and no
/// edge borders the same face twice.
bool face_adjacency_complete(const RotationMap& map);

}  // namespace csl
