#include "csl/perm_action.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"

namespace csl {

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidArgument, "image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw Error(ErrorCode::InvalidArgument, "cycles are not disjoint");
      used[c[i]] = true;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.degree() != degree())
    throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
  std::vector<std::uint32_t> im(degree());
  for (std::size_t x = 0; x < degree(); ++x) im[x] = other.images_[images_[x]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(degree());
  for (std::size_t x = 0; x < degree(); ++x) im[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t m = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation acc = identity(degree());
  while (m) {
    if (m & 1) acc = acc.then(base);
    base = base.then(base);
    m >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<std::uint32_t> c;
    for (auto y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      c.push_back(y);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t fixed = 0;
  for (std::size_t x = 0; x < degree(); ++x) fixed += images_[x] == x;
  return fixed + cycles().size();
}

std::string Permutation::cycle_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

PermGroup PermGroup::closure(std::vector<Permutation> generators,
                             std::uint64_t cap) {
  if (generators.empty())
    throw Error(ErrorCode::InvalidArgument, "a group needs at least one generator");
  const std::size_t d = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != d)
      throw Error(ErrorCode::DegreeMismatch, "generators have different degrees");

  PermGroup group;
  group.degree_ = d;
  group.generators_ = std::move(generators);

  // Right multiplication by generators from the identity reaches every
  // element of a finite group; inverses are powers of generators.
  std::unordered_set<std::vector<std::uint32_t>, ImagesHash> seen;
  auto id = Permutation::identity(d);
  seen.emplace(id.images().begin(), id.images().end());
  group.elements_.push_back(std::move(id));
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (const auto& g : group.generators_) {
      auto next = group.elements_[head].then(g);
      std::vector<std::uint32_t> key(next.images().begin(), next.images().end());
      if (!seen.insert(std::move(key)).second) continue;
      if (group.elements_.size() >= cap)
        throw Error(ErrorCode::CapExceeded,
                    "group closure exceeds " + std::to_string(cap) + " elements");
      group.elements_.push_back(std::move(next));
    }
  }
  return group;
}

bool PermGroup::contains(const Permutation& g) const {
  return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

std::vector<std::uint32_t> PermGroup::orbit(std::uint32_t point) const {
  if (point >= degree_) throw Error(ErrorCode::OutOfRange, "point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<std::uint32_t> orb{point};
  seen[point] = true;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto& g : generators_) {
      const auto y = g(orb[head]);
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> done(degree_, false);
  for (std::uint32_t x = 0; x < degree_; ++x) {
    if (done[x]) continue;
    auto orb = orbit(x);
    for (auto y : orb) done[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

std::uint64_t PermGroup::tuple_orbit_size(std::size_t k) const {
  if (k < 1 || k > degree_)
    throw Error(ErrorCode::OutOfRange, "tuple length out of range");
  std::vector<std::uint32_t> start(k);
  std::iota(start.begin(), start.end(), 0u);
  std::unordered_set<std::vector<std::uint32_t>, ImagesHash> seen{start};
  std::deque<std::vector<std::uint32_t>> queue{start};
  while (!queue.empty()) {
    auto t = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators_) {
      std::vector<std::uint32_t> img(k);
      for (std::size_t i = 0; i < k; ++i) img[i] = g(t[i]);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return seen.size();
}

std::uint64_t falling_factorial(std::uint64_t d, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= d - i;
  return r;
}

bool is_k_transitive(const PermGroup& group, std::size_t k) {
  if (k < 1 || k > group.degree())
    throw Error(ErrorCode::OutOfRange,
                "k = " + std::to_string(k) + " outside 1.." +
                    std::to_string(group.degree()));
  return group.tuple_orbit_size(k) == falling_factorial(group.degree(), k);
}

bool is_k_transitive_literal(const PermGroup& group, std::size_t k) {
  const std::size_t d = group.degree();
  if (k < 1 || k > d) throw Error(ErrorCode::OutOfRange, "k out of range");

  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> cur;
  std::vector<bool> used(d, false);
  auto gen = [&](auto&& self) -> void {
    if (cur.size() == k) {
      tuples.push_back(cur);
      return;
    }
    for (std::uint32_t x = 0; x < d; ++x) {
      if (used[x]) continue;
      used[x] = true;
      cur.push_back(x);
      self(self);
      cur.pop_back();
      used[x] = false;
    }
  };
  gen(gen);

  for (const auto& src : tuples)
    for (const auto& dst : tuples) {
      bool hit = false;
      for (const auto& g : group.elements()) {
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i) ok = g(src[i]) == dst[i];
        if (ok) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  return true;
}

std::size_t transitivity_degree(const PermGroup& group) {
  std::size_t k = 0;
  while (k < group.degree() && is_k_transitive(group, k + 1)) ++k;
  return k;
}

Permutation affine_permutation(const Field& field, int s, int t) {
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "affine scale must be nonzero");
  const int n = field.order();
  std::vector<std::uint32_t> im(n);
  for (int x = 0; x < n; ++x)
    im[x] = static_cast<std::uint32_t>(field.add(field.mul(s, x), t));
  return Permutation(std::move(im));
}

PermGroup affine_group(const Field& field, std::uint64_t cap) {
  std::vector<Permutation> gens;
  for (int b : field.additive_basis()) gens.push_back(affine_permutation(field, 1, b));
  gens.push_back(affine_permutation(field, field.primitive_index(), 0));
  return PermGroup::closure(std::move(gens), cap);
}

}  // namespace csl
