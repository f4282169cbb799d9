#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "csl/perm_action.hpp"

namespace csl {

class Field;

enum class LinkFamily { Chain, BraidClosure, CubeDiagonal, CubeEdge, Icosahedral, Helical };
enum class Ambient { S3, SxS1 };
enum class Hyperbolicity { Asserted, Conditional, Unknown };

/// What the blueprint's linking matrix holds.
///  Signed:    pairwise linking numbers.
///  Interlock: 1 where two components clasp, 0 elsewhere (unsigned).
///  Complete:  every pair of distinct components links; the matrix is the
///             all-ones pattern off the diagonal.
enum class LinkingKind { Signed, Interlock, Complete };

const char* to_string(LinkFamily f);
const char* to_string(Ambient a);
const char* to_string(Hyperbolicity h);
const char* to_string(LinkingKind k);

/// Combinatorial description of a link: its components, how they link and a
/// set of symmetries acting on component indices.
struct LinkBlueprint {
  LinkFamily family = LinkFamily::Chain;
  Ambient ambient = Ambient::S3;
  std::vector<std::string> components;
  LinkingKind linking_kind = LinkingKind::Signed;
  std::vector<std::vector<int>> linking;
  std::optional<int> crossings;
  std::vector<Permutation> symmetry_generators;
  /// Per generator, +1 or -1 for each component according to whether the
  /// symmetry carries its orientation to that of the image component. Empty
  /// means every generator preserves all orientations.
  std::vector<std::vector<int>> symmetry_orientations;
  Hyperbolicity hyperbolicity = Hyperbolicity::Unknown;
  std::string hyperbolicity_note;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();

  std::size_t component_count() const { return components.size(); }
  PermGroup symmetry_group(std::uint64_t cap = kDefaultGroupCap) const;
};

/// Linking matrix symmetric with zero diagonal.
bool linking_well_formed(const LinkBlueprint& link);
/// Every generator g, with orientation signs e, satisfies
/// linking[g(i)][g(j)] == e[i] e[j] linking[i][j].
bool symmetry_preserves_linking(const LinkBlueprint& link);

/// Braid on `strands` strands; letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 0;
  std::vector<int> word;
};

/// Representative 5-strand braid whose strand permutation is (1 3 5 4 2).
BraidWord five_strand_cyclic_braid();

/// Cycle of n unknotted loops with t half-twists.
LinkBlueprint chain_link(int n, int t);

/// Strand permutation: strand starting at position j ends at position
/// perm(j), letters applied left to right. Positions are 0-based.
Permutation braid_permutation(const BraidWord& b);

/// Closure of B^(n m) for a braid whose permutation is one n-cycle.
/// Components are labelled by their starting strand; the diagram shift by
/// one copy of B acts on them as the braid permutation.
LinkBlueprint cyclic_braid_closure(const BraidWord& b, int m);

using Vec3 = std::array<double, 3>;

/// One crossing of a great-circle arrangement.
struct GreatCircleCrossing {
  Vec3 point{};
  int circle_a = 0;
  int circle_b = 0;
  int over = 0;
  int sign = 0;
};

/// Alternating resolution of great circles on the unit sphere.
struct GreatCircleDiagram {
  std::vector<Vec3> normals;
  std::vector<GreatCircleCrossing> crossings;
  /// crossing indices in traversal order along each circle
  std::vector<std::vector<int>> along;
  std::vector<std::vector<int>> linking;
};

/// Resolves the arrangement of great circles perpendicular to `normals`
/// alternately. Circle i is oriented counterclockwise about normals[i]; the
/// sphere is viewed from outside and crossing signs follow the right-hand
/// rule. Crossing 0 has its lower-index circle on top. Throws
/// Error{InvalidArgument} on parallel normals or triple points.
GreatCircleDiagram great_circle_link(const std::vector<Vec3>& normals);

/// Permutation of `axes` induced by a 3x3 rotation, matching images up to
/// sign when `unsigned_axes` is set. Throws if some image is not an axis.
Permutation rotation_action(const std::array<Vec3, 3>& rotation,
                            const std::vector<Vec3>& axes, bool unsigned_axes);

/// For each axis, +1 if the rotation maps it onto its image axis and -1 if
/// onto the negative.
std::vector<int> rotation_orientation(const std::array<Vec3, 3>& rotation,
                                      const std::vector<Vec3>& axes);

/// Rotation of the sphere by `angle` about `axis` (Rodrigues).
std::array<Vec3, 3> rotation_matrix(Vec3 axis, double angle);

/// Four great circles Ax + By + z = 0, A, B in {1, -1}; the cube's rotation
/// group acts on them through the four diagonals.
LinkBlueprint cube_link();

/// Twelve components following the edges of a cube.
LinkBlueprint cube_edge_link();

/// Six great circles perpendicular to the vertex axes of an icosahedron.
LinkBlueprint icosahedral_link();

/// Inradius and circumradius of a regular p-gon with interior angle 2pi/q.
/// Euclidean polygons have unit edge; hyperbolic ones live at curvature -1.
struct PolygonRadii {
  double r1 = 0.0;
  double r2 = 0.0;
  bool hyperbolic = false;
};

/// Throws Error{Spherical} when (p-2)(q-2) < 4 and Error{InvalidArgument}
/// for p < 3 or q < 3.
PolygonRadii polygon_radii(int p, int q);

/// Parameters of the helical-arc construction over a field of order n.
struct HelicalSpec {
  int n = 0;
  int strands_per_face = 0;
  /// Slope of each helical arc is slope_numerator / sigma, sigma the
  /// circumference of the circle the arcs wind around.
  int slope_numerator = 0;
  int face_sides = 0;
  int vertex_degree = 0;
  /// "euclidean", "hyperbolic" or "spherical".
  std::string geometry;
  /// Open interval (r1, r2) of admissible circle radii; not modelled for the
  /// spherical member.
  std::optional<PolygonRadii> rho_window;
  int arc_count = 0;
  int punctures_per_fiber = 0;
  /// Each component is a (torus_p, torus_q) torus knot on its cylinder.
  int torus_p = 0;
  int torus_q = 0;
};

struct HelicalLink {
  LinkBlueprint blueprint;
  HelicalSpec spec;
};

/// One component per face of the field's regular map, each closed up from
/// n-1 helical arcs; symmetries are the affine group on face labels.
HelicalLink helical_link(const Field& field);

}  // namespace csl
