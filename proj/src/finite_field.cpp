#include "csl/finite_field.hpp"

#include <charconv>
#include <sstream>

#include "csl/error.hpp"

namespace csl {

namespace {

std::vector<int> digits(int index, int p, int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const std::vector<int>& c, int p) {
  int v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
  return v;
}

// Remainder of a modulo the monic polynomial m, both low-to-high.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m,
                          int p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t top = a.size(); top-- > dm;) {
    const int lead = a[top] % p;
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) {
      int& slot = a[top - dm + i];
      slot = ((slot - lead * m[i]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

}  // namespace

int FieldSpec::order() const {
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  return n;
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

bool prime_power_decompose(std::int64_t v, int& p, int& k) {
  if (v < 2) return false;
  std::int64_t d = 2;
  while (v % d != 0) ++d;
  int e = 0;
  while (v % d == 0) {
    v /= d;
    ++e;
  }
  if (v != 1) return false;
  p = static_cast<int>(d);
  k = e;
  return true;
}

bool is_irreducible(const std::vector<int>& poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> divisor = digits(idx, p, d);
      divisor.push_back(1);
      const auto r = poly_mod(poly, divisor, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

Field::Field(int p, int k, int cap) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1)
    throw Error(ErrorCode::InvalidArgument, "field degree must be >= 1");
  std::int64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > cap)
      throw Error(ErrorCode::CapExceeded,
                  "field order exceeds cap " + std::to_string(cap));
  }
  n_ = static_cast<int>(n);
  spec_.p = p;
  spec_.k = k;

  // Smallest monic irreducible: scan the lower coefficients in index order.
  for (int idx = 0; idx < n_; ++idx) {
    auto poly = digits(idx, p, k);
    poly.push_back(1);
    if (is_irreducible(poly, p)) {
      spec_.modulus = std::move(poly);
      break;
    }
  }

  add_.resize(static_cast<std::size_t>(n_) * n_);
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  neg_.resize(n_);
  for (int a = 0; a < n_; ++a) {
    const auto ca = digits(a, p, k);
    std::vector<int> cn(k);
    for (int i = 0; i < k; ++i) cn[i] = (p - ca[i]) % p;
    neg_[a] = undigits(cn, p);
    for (int b = 0; b < n_; ++b) {
      const auto cb = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[a * n_ + b] = undigits(s, p);

      std::vector<int> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      mul_[a * n_ + b] = undigits(poly_mod(prod, spec_.modulus, p), p);
    }
  }

  inv_.assign(n_, 0);
  for (int a = 1; a < n_; ++a)
    for (int b = 1; b < n_; ++b)
      if (mul_[a * n_ + b] == 1) {
        inv_[a] = b;
        break;
      }

  for (int a = 1; a < n_; ++a)
    if (multiplicative_order(a) == n_ - 1) {
      primitive_ = a;
      break;
    }
}

Field Field::of_order(int n, int cap) {
  int p = 0;
  int k = 0;
  if (!prime_power_decompose(n, p, k))
    throw Error(ErrorCode::NotPrimePower,
                std::to_string(n) + " is not a prime power");
  return Field(p, k, cap);
}

FieldElement Field::element(int index) const {
  if (index < 0 || index >= n_)
    throw Error(ErrorCode::OutOfRange, "field element index out of range");
  return FieldElement{digits(index, spec_.p, spec_.k)};
}

void Field::check(const FieldElement& e) const {
  if (static_cast<int>(e.coeffs.size()) != spec_.k)
    throw Error(ErrorCode::MismatchedField,
                "element has " + std::to_string(e.coeffs.size()) +
                    " coefficients, field degree is " +
                    std::to_string(spec_.k));
  for (int c : e.coeffs)
    if (c < 0 || c >= spec_.p)
      throw Error(ErrorCode::MismatchedField,
                  "coefficient " + std::to_string(c) + " not reduced mod " +
                      std::to_string(spec_.p));
}

int Field::index_of(const FieldElement& e) const {
  check(e);
  return undigits(e.coeffs, spec_.p);
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  return element(add(index_of(a), index_of(b)));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return element(sub(index_of(a), index_of(b)));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  return element(mul(index_of(a), index_of(b)));
}

FieldElement Field::neg(const FieldElement& a) const {
  return element(neg(index_of(a)));
}

FieldElement Field::inv(const FieldElement& a) const {
  return element(inv(index_of(a)));
}

int Field::inv(int a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return inv_[a];
}

int Field::multiplicative_order(int a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no order");
  int x = a;
  int ord = 1;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.push_back(element(i));
  return out;
}

std::vector<int> Field::additive_basis() const {
  std::vector<int> basis;
  int v = 1;
  for (int i = 0; i < spec_.k; ++i) {
    basis.push_back(v);
    v *= spec_.p;
  }
  return basis;
}

std::string Field::to_string(const FieldElement& e) const {
  check(e);
  std::ostringstream os;
  for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
    if (i) os << ',';
    os << e.coeffs[i];
  }
  return os.str();
}

FieldElement Field::parse(std::string_view text) const {
  FieldElement e;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    int v = 0;
    const auto res = std::from_chars(text.data() + pos, text.data() + end, v);
    if (res.ec != std::errc{} || res.ptr != text.data() + end)
      throw Error(ErrorCode::InvalidArgument,
                  "malformed field element '" + std::string(text) + "'");
    e.coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  check(e);
  return e;
}

}  // namespace csl
