#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace csl {

/// Default upper bound on the field order. Every table in Field is dense.
inline constexpr int kDefaultFieldCap = 64;

/// An element of GF(p^k) as its residue polynomial c0 + c1 x + ... +
/// c(k-1) x^(k-1), coefficients in [0, p).
struct FieldElement {
  std::vector<int> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Parameters of GF(p^k): characteristic, degree and the monic reduction
/// polynomial (coefficients low to high, length k + 1).
struct FieldSpec {
  int p = 0;
  int k = 0;
  std::vector<int> modulus;

  int order() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::int64_t v);

/// If v = p^k for a prime p and k >= 1, stores p and k and returns true.
bool prime_power_decompose(std::int64_t v, int& p, int& k);

/// True when the monic polynomial `poly` (low-to-high coefficients) has no
/// monic factor of degree 1..deg/2 over Z/p.
bool is_irreducible(const std::vector<int>& poly, int p);

/// Finite field with precomputed addition and multiplication tables.
///
/// Elements are addressed by their canonical index sum(c_i p^i), which is
/// also the coefficient-lexicographic enumeration order (highest-degree
/// coefficient most significant). Immutable after construction.
class Field {
 public:
  /// Builds GF(p^k) over the smallest monic irreducible of degree k.
  /// Throws Error{NotPrime} for non-prime p, Error{InvalidArgument} for
  /// k < 1 and Error{CapExceeded} when p^k exceeds `cap`.
  Field(int p, int k, int cap = kDefaultFieldCap);

  /// Builds the field of order n; n must be a prime power.
  static Field of_order(int n, int cap = kDefaultFieldCap);

  const FieldSpec& spec() const { return spec_; }
  int order() const { return n_; }
  int characteristic() const { return spec_.p; }
  int degree() const { return spec_.k; }

  FieldElement element(int index) const;
  int index_of(const FieldElement& e) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;

  // Index-level arithmetic used by the combinatorial builders.
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int sub(int a, int b) const { return add_[a * n_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

  /// Multiplicative order of a nonzero element.
  int multiplicative_order(int a) const;

  /// Least (by index) generator of the multiplicative group.
  int primitive_index() const { return primitive_; }
  FieldElement primitive() const { return element(primitive_); }

  /// All n elements in canonical order.
  std::vector<FieldElement> enumerate() const;

  /// Indices of the additive basis 1, x, ..., x^(k-1).
  std::vector<int> additive_basis() const;

  /// "c0,c1,...,c(k-1)".
  std::string to_string(const FieldElement& e) const;
  FieldElement parse(std::string_view text) const;

 private:
  void check(const FieldElement& e) const;

  FieldSpec spec_;
  int n_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
  int primitive_ = 0;
};

}  // namespace csl
