#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace csl {

class Field;

/// Default bound on the number of elements group_closure will enumerate.
inline constexpr std::uint64_t kDefaultGroupCap = 1'000'000;

/// A bijection of {0, ..., d-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error{InvalidArgument} unless `images` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Product of disjoint cycles, each given as a list of points.
  static Permutation from_cycles(
      std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const { return images_; }

  /// x -> other(this(x)): apply *this first, then `other`.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  bool is_identity() const;

  /// Nontrivial cycles, each starting at its least point, ordered by start.
  std::vector<std::vector<std::uint32_t>> cycles() const;
  /// Number of cycles including fixed points.
  std::size_t cycle_count() const;
  /// Cycle notation with 1-based points, e.g. "(1 3 5 4 2)"; "()" for identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Group of permutations of {0, ..., d-1} given by generators, together with
/// its full element list (breadth-first closure). Immutable once built.
class PermGroup {
 public:
  /// Closes `generators` under composition. Throws Error{InvalidArgument} on
  /// an empty generator list, Error{DegreeMismatch} when degrees differ and
  /// Error{CapExceeded} when the group would exceed `cap` elements.
  static PermGroup closure(std::vector<Permutation> generators,
                           std::uint64_t cap = kDefaultGroupCap);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& g) const;

  /// Orbit of a point under the group, sorted.
  std::vector<std::uint32_t> orbit(std::uint32_t point) const;

  /// Orbits partitioning {0, ..., d-1}.
  std::vector<std::vector<std::uint32_t>> orbits() const;

  /// Size of the orbit of the ordered tuple (0, 1, ..., k-1) on ordered
  /// k-tuples of distinct points.
  std::uint64_t tuple_orbit_size(std::size_t k) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// d (d-1) ... (d-k+1).
std::uint64_t falling_factorial(std::uint64_t d, std::uint64_t k);

/// k-transitivity decided by the size of a single tuple orbit. Throws
/// Error{OutOfRange} unless 1 <= k <= degree.
bool is_k_transitive(const PermGroup& group, std::size_t k);

/// k-transitivity by the definition itself: every ordered k-tuple of distinct
/// points maps to every other by some element. Exponential; for small cases.
bool is_k_transitive_literal(const PermGroup& group, std::size_t k);

/// Largest k such that the action is j-transitive for every j <= k.
std::size_t transitivity_degree(const PermGroup& group);

/// Affine group x -> s x + t of the field acting on element indices.
/// Generated by the translations along the additive basis and multiplication
/// by the primitive element.
PermGroup affine_group(const Field& field, std::uint64_t cap = kDefaultGroupCap);

/// The permutation x -> s x + t on element indices. s must be nonzero.
Permutation affine_permutation(const Field& field, int s, int t);

}  // namespace csl
