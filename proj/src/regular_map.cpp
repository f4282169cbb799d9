#include "csl/regular_map.hpp"

#include <algorithm>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"

namespace csl {

namespace {

// All cycles of a permutation, singletons included, ordered by least point.
std::vector<std::vector<std::uint32_t>> all_cycles(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::uint32_t x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> c;
    for (auto y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<int> common_length(const std::vector<std::vector<std::uint32_t>>& cs) {
  if (cs.empty()) return std::nullopt;
  const auto len = cs.front().size();
  for (const auto& c : cs)
    if (c.size() != len) return std::nullopt;
  return static_cast<int>(len);
}

}  // namespace

RotationMap::RotationMap(Permutation alpha, Permutation phi)
    : alpha_(std::move(alpha)), phi_(std::move(phi)) {
  if (alpha_.degree() != phi_.degree())
    throw Error(ErrorCode::DegreeMismatch, "alpha and phi act on different dart sets");
  if (alpha_.degree() == 0)
    throw Error(ErrorCode::InvalidArgument, "a map needs at least one edge");
  for (std::uint32_t d = 0; d < alpha_.degree(); ++d)
    if (alpha_(d) == d || alpha_(alpha_(d)) != d)
      throw Error(ErrorCode::InvalidArgument,
                  "alpha must be a fixed-point-free involution");
}

std::vector<std::vector<std::uint32_t>> RotationMap::faces() const {
  return all_cycles(phi_);
}

std::vector<std::vector<std::uint32_t>> RotationMap::vertices() const {
  return all_cycles(vertex_rotation());
}

std::vector<std::vector<std::uint32_t>> RotationMap::edges() const {
  return all_cycles(alpha_);
}

std::vector<std::uint32_t> RotationMap::face_of() const {
  std::vector<std::uint32_t> out(dart_count());
  const auto fs = faces();
  for (std::uint32_t f = 0; f < fs.size(); ++f)
    for (auto d : fs[f]) out[d] = f;
  return out;
}

std::uint32_t RotationMap::dart_index(int a, int b) const {
  if (label_order_ == 0)
    throw Error(ErrorCode::InvalidArgument, "map has no face labels");
  if (a < 0 || b < 0 || a >= label_order_ || b >= label_order_ || a == b)
    throw Error(ErrorCode::OutOfRange, "dart label out of range");
  return static_cast<std::uint32_t>(a * (label_order_ - 1) + (b < a ? b : b - 1));
}

RotationMap biggs_map(const Field& field, int omega) {
  const int n = field.order();
  if (n <= 3)
    throw Error(ErrorCode::InvalidArgument,
                "regular map needs field order > 3, got " + std::to_string(n));
  if (omega <= 0 || omega >= n || field.multiplicative_order(omega) != n - 1)
    throw Error(ErrorCode::InvalidArgument, "omega must be a primitive element");

  const std::size_t darts = static_cast<std::size_t>(n) * (n - 1);
  std::vector<std::pair<int, int>> labels;
  labels.reserve(darts);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) labels.emplace_back(a, b);

  auto index = [n](int a, int b) {
    return static_cast<std::uint32_t>(a * (n - 1) + (b < a ? b : b - 1));
  };
  std::vector<std::uint32_t> alpha(darts);
  std::vector<std::uint32_t> phi(darts);
  for (std::size_t d = 0; d < darts; ++d) {
    const auto [a, b] = labels[d];
    alpha[d] = index(b, a);
    phi[d] = index(a, field.add(a, field.mul(omega, field.sub(b, a))));
  }

  RotationMap map(Permutation(std::move(alpha)), Permutation(std::move(phi)));
  map.label_order_ = n;
  map.labels_ = std::move(labels);
  return map;
}

RotationMap biggs_map(const Field& field) {
  return biggs_map(field, field.primitive_index());
}

int genus_formula(std::int64_t n) {
  int p = 0;
  int k = 0;
  if (!prime_power_decompose(n, p, k))
    throw Error(ErrorCode::NotPrimePower, std::to_string(n) + " is not a prime power");
  if (n <= 3)
    throw Error(ErrorCode::InvalidArgument, "genus formula needs n > 3");
  const std::int64_t num = n % 4 == 3 ? n * (n - 7) : n * (n - 5);
  if (num % 4 != 0)
    throw Error(ErrorCode::InvalidArgument,
                "genus formula is not integral at n = " + std::to_string(n));
  return static_cast<int>(1 + num / 4);
}

MapSummary map_summary(const RotationMap& map) {
  const auto fs = map.faces();
  const auto vs = map.vertices();

  // Connectivity over the group generated by alpha and phi.
  const auto D = map.dart_count();
  std::vector<bool> seen(D, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto d = stack.back();
    stack.pop_back();
    for (auto e : {map.alpha()(d), map.phi()(d)})
      if (!seen[e]) {
        seen[e] = true;
        ++reached;
        stack.push_back(e);
      }
  }
  if (reached != D)
    throw Error(ErrorCode::InvalidArgument, "map is not connected");

  MapSummary s;
  s.n = map.label_order();
  s.vertices = static_cast<int>(vs.size());
  s.edges = static_cast<int>(D / 2);
  s.faces = static_cast<int>(fs.size());
  s.euler = s.vertices - s.edges + s.faces;
  if (s.euler % 2 != 0 || s.euler > 2)
    throw Error(ErrorCode::InvalidArgument, "Euler characteristic is not that of an orientable surface");
  s.genus = (2 - s.euler) / 2;
  if (s.n > 3) s.formula_genus = genus_formula(s.n);
  s.vertex_degree = common_length(vs);
  s.face_degree = common_length(fs);
  return s;
}

Permutation affine_map_automorphism(const RotationMap& map, const Field& field,
                                    int s, int t) {
  if (map.label_order() != field.order())
    throw Error(ErrorCode::MismatchedField, "map was not built over this field");
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "affine scale must be nonzero");
  const auto& labels = map.dart_labels();
  std::vector<std::uint32_t> im(labels.size());
  for (std::size_t d = 0; d < labels.size(); ++d) {
    const auto [a, b] = labels[d];
    im[d] = map.dart_index(field.add(field.mul(s, a), t), field.add(field.mul(s, b), t));
  }
  return Permutation(std::move(im));
}

bool is_map_automorphism(const RotationMap& map, const Permutation& g) {
  if (g.degree() != map.dart_count()) return false;
  return map.alpha().then(g) == g.then(map.alpha()) &&
         map.phi().then(g) == g.then(map.phi());
}

Permutation induced_face_permutation(const RotationMap& map, const Permutation& g) {
  if (!is_map_automorphism(map, g))
    throw Error(ErrorCode::InvalidArgument, "not a map automorphism");
  const auto fs = map.faces();
  const auto face = map.face_of();
  std::vector<std::uint32_t> im(fs.size());
  for (std::uint32_t f = 0; f < fs.size(); ++f) im[f] = face[g(fs[f].front())];
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> face_adjacency(const RotationMap& map) {
  const auto face = map.face_of();
  const auto nf = map.faces().size();
  std::vector<std::vector<int>> adj(nf, std::vector<int>(nf, 0));
  for (const auto& e : map.edges()) {
    const auto f = face[e[0]];
    const auto g = face[e[1]];
    if (f == g) {
      ++adj[f][f];
    } else {
      ++adj[f][g];
      ++adj[g][f];
    }
  }
  return adj;
}

bool face_adjacency_complete(const RotationMap& map) {
  const auto adj = face_adjacency(map);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = 0; j < adj.size(); ++j)
      if (adj[i][j] != (i == j ? 0 : 1)) return false;
  return true;
}

}  // namespace csl
