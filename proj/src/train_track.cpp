#include "csl/train_track.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "csl/error.hpp"

namespace csl {

namespace {

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> multiply(const TransitionMatrix& m, const std::vector<double>& v) {
  std::vector<double> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += static_cast<double>(m.entries[i][j]) * v[j];
  return out;
}

double residual_of(const TransitionMatrix& m, const std::vector<double>& v, double lambda) {
  const auto mv = multiply(m, v);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(mv[i] - lambda * v[i]));
  return r;
}

void check_square(const TransitionMatrix& m) {
  if (m.entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  for (const auto& row : m.entries) {
    if (row.size() != m.entries.size())
      throw Error(ErrorCode::InvalidArgument, "matrix is not square");
    for (auto x : row)
      if (x < 0) throw Error(ErrorCode::InvalidArgument, "matrix has a negative entry");
  }
}

}  // namespace

void SubstitutionRules::validate() const {
  std::set<std::string> known(labels.begin(), labels.end());
  if (known.size() != labels.size())
    throw Error(ErrorCode::InvalidArgument, "duplicate branch label");
  for (const auto& l : labels) {
    const auto it = rules.find(l);
    if (it == rules.end() || it->second.empty())
      throw Error(ErrorCode::InvalidArgument, "label '" + l + "' has no image");
    for (const auto& letter : it->second)
      if (!known.count(letter))
        throw Error(ErrorCode::InvalidArgument, "unknown letter '" + letter + "'");
  }
  if (rules.size() != labels.size())
    throw Error(ErrorCode::InvalidArgument, "rule for an undeclared label");
}

std::size_t SubstitutionRules::label_index(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorCode::InvalidArgument, "unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

TransitionMatrix TransitionMatrix::transposed() const {
  TransitionMatrix t;
  t.labels = labels;
  t.entries.assign(size(), std::vector<std::int64_t>(size(), 0));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) t.entries[j][i] = entries[i][j];
  return t;
}

SubstitutionRules biggs_substitution() {
  SubstitutionRules r;
  r.labels = {"w~", "z~"};
  r.rules["w~"] = {"w~", "z~", "w~", "z~", "w~"};
  r.rules["z~"] = {"w~", "z~", "w~", "z~", "w~", "z~", "w~"};
  return r;
}

TransitionMatrix transition_matrix(const SubstitutionRules& rules) {
  rules.validate();
  TransitionMatrix m;
  m.labels = rules.labels;
  m.entries.assign(rules.labels.size(), std::vector<std::int64_t>(rules.labels.size(), 0));
  for (std::size_t i = 0; i < rules.labels.size(); ++i)
    for (const auto& letter : rules.rules.at(rules.labels[i]))
      ++m.entries[i][rules.label_index(letter)];
  return m;
}

bool is_primitive(const TransitionMatrix& m) {
  check_square(m);
  const std::size_t d = m.size();
  std::vector<std::vector<bool>> base(d, std::vector<bool>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) base[i][j] = m.entries[i][j] > 0;
  auto power = base;
  const std::size_t bound = (d - 1) * (d - 1) + 1;
  for (std::size_t e = 1;; ++e) {
    bool positive = true;
    for (const auto& row : power)
      for (bool b : row) positive = positive && b;
    if (positive) return true;
    if (e == bound) return false;
    std::vector<std::vector<bool>> next(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (power[i][k])
          for (std::size_t j = 0; j < d; ++j) next[i][j] = next[i][j] || base[k][j];
    power = std::move(next);
  }
}

PerronResult perron_eigen(const TransitionMatrix& m, double tol, std::uint64_t max_iterations) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!is_primitive(m)) throw Error(ErrorCode::NotPrimitive, "matrix is not primitive");

  std::vector<double> v(m.size(), 1.0);
  PerronResult res;
  for (std::uint64_t it = 1; it <= max_iterations; ++it) {
    auto mv = multiply(m, v);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      num += v[i] * mv[i];
      den += v[i] * v[i];
    }
    const double lambda = num / den;
    const double scale = inf_norm(mv);
    for (auto& x : mv) x /= scale;
    v = std::move(mv);

    const double r = residual_of(m, v, lambda);
    if (r <= tol * inf_norm(v)) {
      // Re-measure at the reported normalisation.
      const double last = v.back();
      for (auto& x : v) x /= last;
      res.lambda = lambda;
      res.vector = std::move(v);
      res.residual = residual_of(m, res.vector, lambda);
      res.iterations = it;
      return res;
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iterations) +
                  " iterations");
}

PerronResult perron_eigen_2x2_exact(const TransitionMatrix& m) {
  check_square(m);
  if (m.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected a 2x2 matrix");
  const double a = static_cast<double>(m.entries[0][0]);
  const double b = static_cast<double>(m.entries[0][1]);
  const double c = static_cast<double>(m.entries[1][0]);
  const double d = static_cast<double>(m.entries[1][1]);
  const double tr = a + d;
  const double disc = (a - d) * (a - d) + 4.0 * b * c;
  if (disc < 0.0) throw Error(ErrorCode::InvalidArgument, "complex spectrum");
  PerronResult res;
  res.lambda = 0.5 * (tr + std::sqrt(disc));
  // (a - lambda) x + b y = 0 with y = 1.
  if (b == 0.0) throw Error(ErrorCode::NotPrimitive, "matrix is not primitive");
  res.vector = {b / (res.lambda - a), 1.0};
  res.residual = residual_of(m, res.vector, res.lambda);
  return res;
}

Dilatation dilatation(double tol) {
  const auto m = transition_matrix(biggs_substitution());
  const auto eig = perron_eigen(m, tol);
  const double det = static_cast<double>(m.entries[0][0] * m.entries[1][1] -
                                         m.entries[0][1] * m.entries[1][0]);
  return Dilatation{eig.lambda, det / eig.lambda};
}

double MeasureSystem::semicircular() const {
  const auto& keys = weights;
  const double w = keys.begin()->second;
  const double z = std::next(keys.begin())->second;
  return w + 2.0 * z;
}

double MeasureSystem::short_branch() const {
  const double w = weights.begin()->second;
  const double z = std::next(weights.begin())->second;
  return 2.0 * w + 2.0 * z;
}

MeasureSystem transverse_weights(double tol) {
  const auto m = transition_matrix(biggs_substitution()).transposed();
  const auto eig = perron_eigen(m, tol);
  MeasureSystem ms;
  ms.kind = MeasureKind::Transverse;
  ms.lambda = eig.lambda;
  ms.weights = {{"w", eig.vector[0]}, {"z", eig.vector[1]}};
  return ms;
}

MeasureSystem tangential_weights(double tol) {
  const auto m = transition_matrix(biggs_substitution());
  const auto eig = perron_eigen(m, tol);
  MeasureSystem ms;
  ms.kind = MeasureKind::Tangential;
  ms.lambda = eig.lambda;
  ms.weights = {{"w~", eig.vector[0]}, {"z~", eig.vector[1]}};
  return ms;
}

std::array<double, 3> balance_residuals(const MeasureSystem& t) {
  if (t.kind != MeasureKind::Transverse)
    throw Error(ErrorCode::InvalidArgument, "balance equations need transverse weights");
  const double w = t.weights.at("w");
  const double z = t.weights.at("z");
  const double l = t.lambda;
  return {std::abs(10 * w + 14 * z - l * (2 * w + 2 * z)),
          std::abs(2 * w + 3 * z - l * z),
          std::abs(3 * w + 4 * z - l * w)};
}

std::vector<ArcCrossing> dilatation_arcs() {
  return {ArcCrossing{"AB", {{"w", 10}, {"z", 14}}},
          ArcCrossing{"CD", {{"w", 2}, {"z", 2}}},
          ArcCrossing{"DF", {{"w", 2}, {"z", 3}}},
          ArcCrossing{"EF", {{"z", 1}}}};
}

double crossing_measure(const ArcCrossing& arc, const MeasureSystem& m) {
  double total = 0.0;
  for (const auto& [cls, count] : arc.counts) {
    if (count < 0) throw Error(ErrorCode::InvalidArgument, "negative crossing count");
    const auto it = m.weights.find(cls);
    if (it == m.weights.end())
      throw Error(ErrorCode::InvalidArgument, "measure has no class '" + cls + "'");
    total += count * it->second;
  }
  return total;
}

std::vector<std::uint64_t> iterated_lengths(const SubstitutionRules& rules,
                                            const std::string& start, int steps) {
  const auto m = transition_matrix(rules);
  std::vector<std::uint64_t> counts(m.size(), 0);
  counts[rules.label_index(start)] = 1;
  std::vector<std::uint64_t> out{1};
  for (int s = 0; s < steps; ++s) {
    std::vector<std::uint64_t> next(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j)
        next[j] += counts[i] * static_cast<std::uint64_t>(m.entries[i][j]);
    counts = std::move(next);
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    out.push_back(total);
  }
  return out;
}

std::vector<std::string> iterate_word(const SubstitutionRules& rules,
                                      const std::string& start, int steps,
                                      std::size_t max_letters) {
  rules.validate();
  rules.label_index(start);
  std::vector<std::string> word{start};
  for (int s = 0; s < steps; ++s) {
    std::vector<std::string> next;
    for (const auto& letter : word) {
      const auto& img = rules.rules.at(letter);
      if (next.size() + img.size() > max_letters)
        throw Error(ErrorCode::CapExceeded, "iterated word exceeds letter cap");
      next.insert(next.end(), img.begin(), img.end());
    }
    word = std::move(next);
  }
  return word;
}

AnosovReport anosov_check(const std::array<std::array<std::int64_t, 2>, 2>& m) {
  AnosovReport r;
  r.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  r.trace = m[0][0] + m[1][1];
  const double disc = static_cast<double>(r.trace * r.trace - 4 * r.det);
  r.real_spectrum = disc >= 0.0;
  if (r.real_spectrum) {
    const double s = std::sqrt(disc);
    r.eigenvalues = std::array<double, 2>{0.5 * (r.trace + s), 0.5 * (r.trace - s)};
  }
  const bool unimodular = r.det == 1 || r.det == -1;
  bool off_circle = r.real_spectrum;
  if (r.eigenvalues)
    for (double e : *r.eigenvalues) off_circle = off_circle && std::abs(std::abs(e) - 1.0) > 1e-12;
  r.anosov = unimodular && off_circle;
  return r;
}

}  // namespace csl
