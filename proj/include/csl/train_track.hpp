#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace csl {

inline constexpr double kDefaultEigenTolerance = 1e-13;
inline constexpr std::uint64_t kDefaultEigenIterations = 1'000'000;

/// Edge-path images of branch classes under the monodromy.
struct SubstitutionRules {
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::string>> rules;

  /// Throws Error{InvalidArgument} on unknown letters, duplicate labels or
  /// empty images.
  void validate() const;
  std::size_t label_index(const std::string& label) const;
};

/// Square nonnegative integer matrix; entry (i, j) counts label j in the
/// image of label i, so that row i is the length of the image of branch i.
/// The transpose carries the transverse (weight) system.
struct TransitionMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t size() const { return entries.size(); }
  TransitionMatrix transposed() const;
};

/// The reduced two-class track: w~ -> w~ z~ w~ z~ w~, z~ -> w~ z~ w~ z~ w~ z~ w~.
SubstitutionRules biggs_substitution();

TransitionMatrix transition_matrix(const SubstitutionRules& rules);

/// Some power of the matrix is strictly positive (checked up to the
/// Wielandt bound (d-1)^2 + 1).
bool is_primitive(const TransitionMatrix& m);

struct PerronResult {
  double lambda = 0.0;
  /// Strictly positive, last entry 1.
  std::vector<double> vector;
  double residual = 0.0;
  std::uint64_t iterations = 0;
};

/// Dominant eigenpair of a primitive matrix by power iteration from the
/// all-ones vector with a Rayleigh-quotient stopping test. Stops once
/// ||Mv - lambda v||_inf <= tol ||v||_inf. Throws Error{NotPrimitive} or
/// Error{NoConvergence}.
PerronResult perron_eigen(const TransitionMatrix& m,
                          double tol = kDefaultEigenTolerance,
                          std::uint64_t max_iterations = kDefaultEigenIterations);

/// Closed-form dominant eigenpair of a 2x2 matrix with real spectrum.
PerronResult perron_eigen_2x2_exact(const TransitionMatrix& m);

struct Dilatation {
  double lambda = 0.0;
  double lambda_inverse = 0.0;
};

/// Stretch factor of the point-pushing monodromy from the reduced track and
/// its inverse (the other eigenvalue, det / lambda).
Dilatation dilatation(double tol = kDefaultEigenTolerance);

enum class MeasureKind { Transverse, Tangential };

struct MeasureSystem {
  MeasureKind kind = MeasureKind::Transverse;
  /// w and z (transverse) or w~ and z~ (tangential); the second is 1.
  std::map<std::string, double> weights;
  double lambda = 0.0;

  double semicircular() const;  // w + 2z
  double short_branch() const;  // 2w + 2z
};

/// Crossing weights of the track from the transpose system, z = 1.
MeasureSystem transverse_weights(double tol = kDefaultEigenTolerance);
/// Branch lengths from the tangential system, z~ = 1.
MeasureSystem tangential_weights(double tol = kDefaultEigenTolerance);

/// Residuals of the three crossing-measure balance equations at (w, z, lambda):
///   10w + 14z = lambda (2w + 2z)
///   2w + 3z  = lambda z
///   3w + 4z  = lambda w
std::array<double, 3> balance_residuals(const MeasureSystem& transverse);

/// Arc transverse to the track, recorded as how many units of each primitive
/// weight class it crosses.
struct ArcCrossing {
  std::string label;
  std::map<std::string, int> counts;
};

/// Arc fixtures of the unreduced track around a face: AB and its image CD,
/// DF and its image EF.
std::vector<ArcCrossing> dilatation_arcs();

/// Weighted crossing count; throws Error{InvalidArgument} for classes the
/// measure does not carry.
double crossing_measure(const ArcCrossing& arc, const MeasureSystem& m);

/// Letter-count growth: total length after each of `steps` substitutions
/// starting from `start`. Index 0 is the start word (length 1).
std::vector<std::uint64_t> iterated_lengths(const SubstitutionRules& rules,
                                            const std::string& start, int steps);

/// Explicit k-fold image word; throws Error{CapExceeded} past `max_letters`.
std::vector<std::string> iterate_word(const SubstitutionRules& rules,
                                      const std::string& start, int steps,
                                      std::size_t max_letters = 10'000'000);

struct AnosovReport {
  std::int64_t det = 0;
  std::int64_t trace = 0;
  bool real_spectrum = false;
  /// Real eigenvalues (larger first) when real_spectrum holds.
  std::optional<std::array<double, 2>> eigenvalues;
  /// det = +-1 and no eigenvalue on the unit circle.
  bool anosov = false;
};

AnosovReport anosov_check(const std::array<std::array<std::int64_t, 2>, 2>& m);

}  // namespace csl
