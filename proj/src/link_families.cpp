#include "csl/link_families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"
#include "csl/regular_map.hpp"

namespace csl {

namespace {

constexpr double kGeomEps = 1e-9;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

Vec3 normalized(const Vec3& a) {
  const double len = std::sqrt(dot(a, a));
  if (len < kGeomEps) throw Error(ErrorCode::InvalidArgument, "zero vector");
  return scaled(a, 1.0 / len);
}

Vec3 apply(const std::array<Vec3, 3>& r, const Vec3& v) {
  return {dot(r[0], v), dot(r[1], v), dot(r[2], v)};
}

bool near(const Vec3& a, const Vec3& b) {
  return std::abs(a[0] - b[0]) < kGeomEps && std::abs(a[1] - b[1]) < kGeomEps &&
         std::abs(a[2] - b[2]) < kGeomEps;
}

std::string vec_label(const Vec3& v) {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ',';
    const double x = v[i];
    if (std::abs(x) < kGeomEps) s += "0";
    else s += x > 0 ? "+" : "-";
  }
  return s + ")";
}

std::vector<std::vector<int>> cyclic_neighbors(int n, int value) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    m[i][j] += value;
    m[j][i] += value;
  }
  return m;
}

Permutation cyclic_shift(int n) {
  std::vector<std::uint32_t> im(n);
  for (int i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((i + 1) % n);
  return Permutation(std::move(im));
}

// 90 degrees about z and 120 degrees about (1,1,1).
std::array<Vec3, 3> cube_quarter_turn() {
  return {Vec3{0, -1, 0}, Vec3{1, 0, 0}, Vec3{0, 0, 1}};
}

std::array<Vec3, 3> cube_third_turn() {
  return {Vec3{0, 0, 1}, Vec3{1, 0, 0}, Vec3{0, 1, 0}};
}

}  // namespace

const char* to_string(LinkFamily f) {
  switch (f) {
    case LinkFamily::Chain: return "chain";
    case LinkFamily::BraidClosure: return "braid_closure";
    case LinkFamily::CubeDiagonal: return "cube_diagonal";
    case LinkFamily::CubeEdge: return "cube_edge";
    case LinkFamily::Icosahedral: return "icosahedral";
    case LinkFamily::Helical: return "helical";
  }
  return "?";
}

const char* to_string(Ambient a) {
  return a == Ambient::S3 ? "S3" : "SxS1";
}

const char* to_string(Hyperbolicity h) {
  switch (h) {
    case Hyperbolicity::Asserted: return "asserted";
    case Hyperbolicity::Conditional: return "conditional";
    case Hyperbolicity::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(LinkingKind k) {
  switch (k) {
    case LinkingKind::Signed: return "signed";
    case LinkingKind::Interlock: return "interlock";
    case LinkingKind::Complete: return "complete";
  }
  return "?";
}

PermGroup LinkBlueprint::symmetry_group(std::uint64_t cap) const {
  if (symmetry_generators.empty())
    return PermGroup::closure({Permutation::identity(components.size())}, cap);
  return PermGroup::closure(symmetry_generators, cap);
}

bool linking_well_formed(const LinkBlueprint& link) {
  const auto n = link.components.size();
  if (link.linking.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (link.linking[i].size() != n || link.linking[i][i] != 0) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (link.linking[i][j] != link.linking[j][i]) return false;
  }
  return true;
}

bool symmetry_preserves_linking(const LinkBlueprint& link) {
  const auto n = link.components.size();
  for (std::size_t k = 0; k < link.symmetry_generators.size(); ++k) {
    const auto& g = link.symmetry_generators[k];
    if (g.degree() != n) return false;
    std::vector<int> sign(n, 1);
    if (!link.symmetry_orientations.empty()) sign = link.symmetry_orientations.at(k);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        if (link.linking[g(i)][g(j)] != sign[i] * sign[j] * link.linking[i][j]) return false;
  }
  return true;
}

BraidWord five_strand_cyclic_braid() { return BraidWord{5, {1, 3, -2, -4}}; }

LinkBlueprint chain_link(int n, int t) {
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "a chain needs at least 2 loops");
  LinkBlueprint bp;
  bp.family = LinkFamily::Chain;
  bp.ambient = Ambient::S3;
  for (int i = 0; i < n; ++i) bp.components.push_back("loop" + std::to_string(i));
  bp.linking_kind = LinkingKind::Signed;
  // Neighbouring loops clasp once; with two loops both clasps join the same pair.
  bp.linking = cyclic_neighbors(n, t >= 0 ? 1 : -1);
  bp.symmetry_generators.push_back(cyclic_shift(n));
  if (n >= 5) {
    bp.hyperbolicity = Hyperbolicity::Asserted;
    bp.hyperbolicity_note = "Neumann-Reid: hyperbolic for every t when n >= 5";
  } else {
    bp.hyperbolicity = Hyperbolicity::Unknown;
    bp.hyperbolicity_note =
        "hyperbolic for all but 5-n values of t; the exceptional t are not enumerated";
  }
  bp.params = {{"n", n}, {"t", t}};
  return bp;
}

Permutation braid_permutation(const BraidWord& b) {
  if (b.strands < 1) throw Error(ErrorCode::InvalidArgument, "braid needs a strand");
  // at[pos] = starting position of the strand currently at pos
  std::vector<std::uint32_t> at(b.strands);
  for (int i = 0; i < b.strands; ++i) at[i] = static_cast<std::uint32_t>(i);
  for (int letter : b.word) {
    const int g = std::abs(letter);
    if (letter == 0 || g > b.strands - 1)
      throw Error(ErrorCode::OutOfRange,
                  "braid generator " + std::to_string(letter) + " outside 1.." +
                      std::to_string(b.strands - 1));
    std::swap(at[g - 1], at[g]);
  }
  std::vector<std::uint32_t> im(b.strands);
  for (int pos = 0; pos < b.strands; ++pos) im[at[pos]] = static_cast<std::uint32_t>(pos);
  return Permutation(std::move(im));
}

LinkBlueprint cyclic_braid_closure(const BraidWord& b, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "braid power multiplier must be >= 1");
  const auto perm = braid_permutation(b);
  const int n = b.strands;
  if (n < 2 || perm.cycles().size() != 1 || perm.cycles().front().size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::NotCyclic,
                "braid permutation " + perm.cycle_string() + " is not a single " +
                    std::to_string(n) + "-cycle");

  const std::int64_t power = static_cast<std::int64_t>(n) * m;
  const auto closing = perm.pow(power);
  const auto components = closing.cycle_count();
  if (components != static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidArgument, "closure component count mismatch");

  // Each strand of B^(nm) closes on itself, so the component through a
  // position is the strand that started there.
  std::vector<int> owner(n);
  for (int i = 0; i < n; ++i) owner[i] = i;
  std::vector<std::vector<int>> twice(n, std::vector<int>(n, 0));
  for (std::int64_t rep = 0; rep < power; ++rep)
    for (int letter : b.word) {
      const int g = std::abs(letter);
      const int s = letter > 0 ? 1 : -1;
      const int x = owner[g - 1];
      const int y = owner[g];
      if (x != y) {
        twice[x][y] += s;
        twice[y][x] += s;
      }
      std::swap(owner[g - 1], owner[g]);
    }

  LinkBlueprint bp;
  bp.family = LinkFamily::BraidClosure;
  bp.ambient = Ambient::S3;
  for (int i = 0; i < n; ++i) bp.components.push_back("strand" + std::to_string(i + 1));
  bp.linking_kind = LinkingKind::Signed;
  bp.linking.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (twice[i][j] % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "odd crossing sum between closed components");
      bp.linking[i][j] = twice[i][j] / 2;
    }
  bp.crossings = static_cast<int>(b.word.size() * power);
  bp.symmetry_generators.push_back(perm);
  bp.hyperbolicity = Hyperbolicity::Conditional;
  bp.hyperbolicity_note =
      "closure of a pseudo-Anosov braid power; hyperbolic for sufficiently large m "
      "(2pi theorem)";
  bp.params = {{"strands", n},
               {"word", b.word},
               {"m", m},
               {"power", power},
               {"permutation", perm.cycle_string()}};
  return bp;
}

GreatCircleDiagram great_circle_link(const std::vector<Vec3>& normals) {
  const int c = static_cast<int>(normals.size());
  GreatCircleDiagram diag;
  for (const auto& v : normals) diag.normals.push_back(normalized(v));

  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      const auto axis = cross(diag.normals[i], diag.normals[j]);
      if (std::sqrt(dot(axis, axis)) < kGeomEps)
        throw Error(ErrorCode::InvalidArgument, "parallel great circles");
      const auto p = normalized(axis);
      for (const auto& q : {p, scaled(p, -1.0)}) {
        for (int k = 0; k < c; ++k)
          if (k != i && k != j && std::abs(dot(diag.normals[k], q)) < kGeomEps)
            throw Error(ErrorCode::InvalidArgument, "three great circles meet at a point");
        diag.crossings.push_back(GreatCircleCrossing{q, i, j, -1, 0});
      }
    }

  // Order crossings along each circle by angle in the frame (u, n x u).
  diag.along.assign(c, {});
  for (int i = 0; i < c; ++i) {
    const auto& nrm = diag.normals[i];
    const Vec3 seed = std::abs(nrm[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const auto u = normalized(cross(cross(nrm, seed), nrm));
    const auto v = cross(nrm, u);
    std::vector<std::pair<double, int>> on;
    for (int x = 0; x < static_cast<int>(diag.crossings.size()); ++x) {
      const auto& cr = diag.crossings[x];
      if (cr.circle_a != i && cr.circle_b != i) continue;
      on.emplace_back(std::atan2(dot(cr.point, v), dot(cr.point, u)), x);
    }
    std::sort(on.begin(), on.end());
    for (const auto& [angle, x] : on) diag.along[i].push_back(x);
  }

  // flip[x] = 1 puts circle_b on top. Alternation along circle i says the
  // status "i on top" changes between consecutive crossings:
  //   flip[x] ^ flip[y] = 1 ^ [i == a_x] ^ [i == a_y].
  const int nx = static_cast<int>(diag.crossings.size());
  std::vector<std::vector<std::pair<int, int>>> constraints(nx);
  for (int i = 0; i < c; ++i) {
    const auto& seq = diag.along[i];
    for (std::size_t s = 0; s < seq.size(); ++s) {
      const int x = seq[s];
      const int y = seq[(s + 1) % seq.size()];
      const int parity = 1 ^ (diag.crossings[x].circle_a == i) ^ (diag.crossings[y].circle_a == i);
      constraints[x].emplace_back(y, parity);
      constraints[y].emplace_back(x, parity);
    }
  }
  std::vector<int> flip(nx, -1);
  for (int start = 0; start < nx; ++start) {
    if (flip[start] >= 0) continue;
    flip[start] = 0;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, parity] : constraints[x]) {
        const int want = flip[x] ^ parity;
        if (flip[y] < 0) {
          flip[y] = want;
          stack.push_back(y);
        } else if (flip[y] != want) {
          throw Error(ErrorCode::InvalidArgument, "arrangement admits no alternating resolution");
        }
      }
    }
  }

  diag.linking.assign(c, std::vector<int>(c, 0));
  std::vector<std::vector<int>> twice(c, std::vector<int>(c, 0));
  for (int x = 0; x < nx; ++x) {
    auto& cr = diag.crossings[x];
    cr.over = flip[x] ? cr.circle_b : cr.circle_a;
    const int under = cr.over == cr.circle_a ? cr.circle_b : cr.circle_a;
    const auto t_over = cross(diag.normals[cr.over], cr.point);
    const auto t_under = cross(diag.normals[under], cr.point);
    cr.sign = dot(cross(t_over, t_under), cr.point) > 0 ? 1 : -1;
    twice[cr.circle_a][cr.circle_b] += cr.sign;
    twice[cr.circle_b][cr.circle_a] += cr.sign;
  }
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) diag.linking[i][j] = twice[i][j] / 2;
  return diag;
}

std::vector<int> rotation_orientation(const std::array<Vec3, 3>& rotation,
                                      const std::vector<Vec3>& axes) {
  const auto perm = rotation_action(rotation, axes, true);
  std::vector<int> sign(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i)
    sign[i] = near(apply(rotation, axes[i]), axes[perm(static_cast<std::uint32_t>(i))]) ? 1 : -1;
  return sign;
}

std::array<Vec3, 3> rotation_matrix(Vec3 axis, double angle) {
  const auto k = normalized(axis);
  const double cs = std::cos(angle);
  const double sn = std::sin(angle);
  const double t = 1.0 - cs;
  return {Vec3{cs + k[0] * k[0] * t, k[0] * k[1] * t - k[2] * sn, k[0] * k[2] * t + k[1] * sn},
          Vec3{k[1] * k[0] * t + k[2] * sn, cs + k[1] * k[1] * t, k[1] * k[2] * t - k[0] * sn},
          Vec3{k[2] * k[0] * t - k[1] * sn, k[2] * k[1] * t + k[0] * sn, cs + k[2] * k[2] * t}};
}

Permutation rotation_action(const std::array<Vec3, 3>& rotation,
                            const std::vector<Vec3>& axes, bool unsigned_axes) {
  std::vector<std::uint32_t> im(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const auto img = apply(rotation, axes[i]);
    bool found = false;
    for (std::size_t j = 0; j < axes.size() && !found; ++j)
      if (near(img, axes[j]) || (unsigned_axes && near(img, scaled(axes[j], -1.0)))) {
        im[i] = static_cast<std::uint32_t>(j);
        found = true;
      }
    if (!found)
      throw Error(ErrorCode::InvalidArgument, "rotation does not permute the axes");
  }
  return Permutation(std::move(im));
}

LinkBlueprint cube_link() {
  std::vector<Vec3> normals;
  for (int a : {1, -1})
    for (int b : {1, -1}) normals.push_back(Vec3{double(a), double(b), 1.0});
  const auto diag = great_circle_link(normals);

  LinkBlueprint bp;
  bp.family = LinkFamily::CubeDiagonal;
  bp.ambient = Ambient::S3;
  for (const auto& v : normals) bp.components.push_back("plane" + vec_label(v));
  bp.linking_kind = LinkingKind::Signed;
  bp.linking = diag.linking;
  bp.crossings = static_cast<int>(diag.crossings.size());
  // Great circle i is oriented about normals[i], so a rotation sending a
  // normal to minus another reverses that component.
  for (const auto& r : {cube_quarter_turn(), cube_third_turn()}) {
    bp.symmetry_generators.push_back(rotation_action(r, normals, true));
    bp.symmetry_orientations.push_back(rotation_orientation(r, normals));
  }
  bp.hyperbolicity = Hyperbolicity::Asserted;
  bp.hyperbolicity_note = "alternating great-circle link; hyperbolicity verified with SnapPea";
  bp.params = {{"circles", 4}};
  return bp;
}

LinkBlueprint cube_edge_link() {
  std::vector<Vec3> mids;
  for (int zero = 0; zero < 3; ++zero)
    for (int s : {1, -1})
      for (int t : {1, -1}) {
        Vec3 v{};
        v[(zero + 1) % 3] = s;
        v[(zero + 2) % 3] = t;
        mids.push_back(v);
      }

  LinkBlueprint bp;
  bp.family = LinkFamily::CubeEdge;
  bp.ambient = Ambient::S3;
  for (const auto& v : mids) bp.components.push_back("edge" + vec_label(v));
  // Edges meeting at a cube vertex clasp through that vertex's half-loops.
  bp.linking_kind = LinkingKind::Interlock;
  bp.linking.assign(mids.size(), std::vector<int>(mids.size(), 0));
  for (std::size_t i = 0; i < mids.size(); ++i)
    for (std::size_t j = 0; j < mids.size(); ++j)
      if (i != j && std::abs(dot(mids[i], mids[j]) - 1.0) < kGeomEps) bp.linking[i][j] = 1;
  bp.symmetry_generators = {rotation_action(cube_quarter_turn(), mids, false),
                            rotation_action(cube_third_turn(), mids, false)};
  bp.hyperbolicity = Hyperbolicity::Asserted;
  bp.hyperbolicity_note = "hyperbolicity verified with SnapPea";
  bp.params = {{"vertices", 8}, {"half_loops_per_vertex", 3}};
  return bp;
}

LinkBlueprint icosahedral_link() {
  const double phi = std::numbers::phi;
  const std::vector<Vec3> axes{{0, 1, phi}, {0, 1, -phi}, {1, phi, 0},
                               {1, -phi, 0}, {phi, 0, 1}, {-phi, 0, 1}};
  const auto diag = great_circle_link(axes);

  LinkBlueprint bp;
  bp.family = LinkFamily::Icosahedral;
  bp.ambient = Ambient::S3;
  for (const auto& v : axes) bp.components.push_back("axis" + vec_label(v));
  bp.linking_kind = LinkingKind::Signed;
  bp.linking = diag.linking;
  bp.crossings = static_cast<int>(diag.crossings.size());
  for (const auto& r : {cube_third_turn(), rotation_matrix(axes[0], 2.0 * std::numbers::pi / 5.0)}) {
    bp.symmetry_generators.push_back(rotation_action(r, axes, true));
    bp.symmetry_orientations.push_back(rotation_orientation(r, axes));
  }
  bp.hyperbolicity = Hyperbolicity::Asserted;
  bp.hyperbolicity_note = "alternating great-circle link; hyperbolicity verified with SnapPea";
  bp.params = {{"circles", 6}};
  return bp;
}

PolygonRadii polygon_radii(int p, int q) {
  if (p < 3 || q < 3)
    throw Error(ErrorCode::InvalidArgument, "polygon needs p >= 3 and q >= 3");
  const int curvature_sign = (p - 2) * (q - 2) - 4;
  if (curvature_sign < 0)
    throw Error(ErrorCode::Spherical,
                "{" + std::to_string(p) + "," + std::to_string(q) + "} is spherical");
  const double a = std::numbers::pi / p;  // angle at the centre
  const double b = std::numbers::pi / q;  // half the interior angle
  PolygonRadii r;
  if (curvature_sign == 0) {
    r.r1 = 0.5 / std::tan(a);
    r.r2 = 0.5 / std::sin(a);
  } else {
    // Right triangle centre / edge midpoint / vertex at curvature -1.
    r.hyperbolic = true;
    r.r1 = std::acosh(std::cos(b) / std::sin(a));
    r.r2 = std::acosh(1.0 / (std::tan(a) * std::tan(b)));
  }
  return r;
}

HelicalLink helical_link(const Field& field) {
  const int n = field.order();
  if (n <= 3)
    throw Error(ErrorCode::InvalidArgument, "helical construction needs n > 3");
  const auto map = biggs_map(field);
  const auto summary = map_summary(map);

  HelicalSpec hs;
  hs.n = n;
  hs.strands_per_face = n - 1;
  hs.slope_numerator = n - 1;
  hs.face_sides = *summary.face_degree;
  hs.vertex_degree = summary.vertex_degree.value_or(0);
  const int p = hs.face_sides;
  const int q = hs.vertex_degree;
  const int sign = (p - 2) * (q - 2) - 4;
  hs.geometry = sign < 0 ? "spherical" : sign == 0 ? "euclidean" : "hyperbolic";
  if (sign >= 0) hs.rho_window = polygon_radii(p, q);

  // Arc i runs from x_i at the bottom to x_{i+1} at the top; gluing the ends
  // follows i -> i+1 mod (n-1), so each face yields one closed curve.
  std::vector<std::uint32_t> next(n - 1);
  for (int i = 0; i < n - 1; ++i) next[i] = static_cast<std::uint32_t>((i + 1) % (n - 1));
  const auto curves_per_face = Permutation(std::move(next)).cycle_count();
  hs.arc_count = n * (n - 1);
  hs.punctures_per_fiber = n * (n - 1);
  hs.torus_p = n - 1;
  hs.torus_q = 1;

  LinkBlueprint bp;
  bp.family = LinkFamily::Helical;
  bp.ambient = Ambient::SxS1;
  const auto faces = map.faces();
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t c = 0; c < curves_per_face; ++c)
      bp.components.push_back("face" + field.to_string(field.element(static_cast<int>(f))));

  // A strand links the neighbouring face's strand across every shared edge.
  bp.linking_kind = face_adjacency_complete(map) ? LinkingKind::Complete : LinkingKind::Interlock;
  bp.linking = face_adjacency(map);
  for (std::size_t i = 0; i < bp.linking.size(); ++i) bp.linking[i][i] = 0;

  for (int b : field.additive_basis())
    bp.symmetry_generators.push_back(
        induced_face_permutation(map, affine_map_automorphism(map, field, 1, b)));
  bp.symmetry_generators.push_back(induced_face_permutation(
      map, affine_map_automorphism(map, field, field.primitive_index(), 0)));

  bp.hyperbolicity = Hyperbolicity::Asserted;
  bp.hyperbolicity_note =
      "mapping torus of a pseudo-Anosov point-pushing map (Thurston); dilatation 3+2sqrt2";
  bp.params = {{"n", n},
               {"p", field.characteristic()},
               {"k", field.degree()},
               {"genus", summary.genus},
               {"arcs_per_component", n - 1},
               {"torus_knot", {hs.torus_p, hs.torus_q}}};
  return HelicalLink{std::move(bp), std::move(hs)};
}

}  // namespace csl
