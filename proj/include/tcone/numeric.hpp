#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcone/cone.hpp"
#include "tcone/polynomial.hpp"

namespace tcone {

using Complex = std::complex<double>;

struct ComplexPoint {
  std::vector<Complex> coords;

  ComplexPoint() = default;
  explicit ComplexPoint(std::vector<Complex> c) : coords(std::move(c)) {}

  std::size_t size() const noexcept { return coords.size(); }
  double norm() const;
  ComplexPoint scaled(double t) const;
  friend double distance(const ComplexPoint& a, const ComplexPoint& b);
};

// Geometric schedule t_k = t0 * factor^k, k = 0..steps-1.
struct TSchedule {
  double t0 = 10.0;
  double factor = 10.0;
  int steps = 5;

  // Throws tcone::Error unless t0 > 0, factor > 1, steps >= 1.
  void validate() const;
  std::vector<double> values() const;
};

// Fixed finite-sample criteria. Defaults match the command-line defaults.
struct Thresholds {
  double ratio_decay = 0.5;         // pass needs last/first below this
  double plateau_tolerance = 0.1;   // relative spread that counts as a plateau
  double residual_tolerance = 1e-10;
  double zero_ratio = 1e-6;         // distance ratios below this count as zero
  double sample_residual = 1e-2;    // cone-generator residual on sampled directions
  double sample_fraction = 0.95;    // directions that must meet sample_residual
};

enum class ReportKind { Ratio, Distance, Sample };
enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(ReportKind kind);
std::string_view to_string(Verdict verdict);

struct ReportSample {
  double parameter;  // t for ratio/distance, R for sampling
  double value;
};

struct VerificationReport {
  ReportKind kind = ReportKind::Ratio;
  std::vector<std::string> variables;
  std::optional<ComplexPoint> direction;
  std::optional<TSchedule> schedule;
  std::vector<ReportSample> samples;
  std::optional<double> fitted_decay_exponent;
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t seed = 0;
  std::string diagnostics;
  // Unit directions produced by far-point sampling (kind == Sample only).
  std::vector<ComplexPoint> directions;
};

// Floating evaluation; throws NumericOverflow when the value is not finite.
Complex evaluate_complex(const Polynomial& f, const ComplexPoint& p);

struct RootsResult {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |p(z)| / sum |a_k| |z|^k per root
  bool converged = false;
  int sweeps = 0;
};

// Coefficients in ascending powers: coeffs[k] multiplies s^k.
// Durand-Kerner iteration started from (0.4+0.9i)^k times the Cauchy radius.
RootsResult roots_univariate(std::span<const Complex> coeffs, double tol = 1e-14);

// Ascending coefficient list of f restricted to the line where every
// variable except `free_var` takes the value in `fixed`.
std::vector<Complex> substitute_partial(const Polynomial& f, const std::map<std::string, Complex>& fixed,
                                        std::string_view free_var);

struct SampleResult {
  std::vector<ComplexPoint> directions;
  int trials = 0;
  int skipped = 0;        // degenerate restrictions
  int unconverged = 0;    // root finder hit its sweep limit
  std::size_t discarded = 0;  // roots with norm below R
};

SampleResult sample_far_directions(const Polynomial& f, double radius, int trials, std::uint64_t seed);

// max_i |g_i(t v)|^{1/deg g_i} / t along the schedule.
VerificationReport loj_ratio_schedule(std::span<const Polynomial> generators, const ComplexPoint& direction,
                                      const TSchedule& schedule, const Thresholds& thresholds = {});

struct DistanceOptions {
  int perturbations = 8;
  double perturbation_radius = 0.5;
  double initial_damping = 1e-3;
  double residual_tolerance = 1e-10;
  int max_iterations = 200;
  int refine_iterations = 200;
  std::uint64_t seed = 42;
};

struct DistanceEstimate {
  double bound = 0.0;  // +infinity when no run converged
  ComplexPoint landed;
  bool converged = false;
  int converged_runs = 0;
};

// Upper bound on the distance from x0 to V(generators): the closest
// residual-certified point reached by damped least squares.
DistanceEstimate estimate_distance_upper(std::span<const Polynomial> generators, const ComplexPoint& x0,
                                         const DistanceOptions& options = {});

// estimate_distance_upper(t v) / t along the schedule.
VerificationReport distance_ratio_report(std::span<const Polynomial> generators, const ComplexPoint& direction,
                                 const TSchedule& schedule, const DistanceOptions& options = {},
                                 const Thresholds& thresholds = {});

// Far-direction sampling of a hypersurface checked against its cone.
VerificationReport sampling_report(const Polynomial& f, const ConeDescription& cone, double radius, int trials,
                                   std::uint64_t seed, const Thresholds& thresholds = {});

// Least-squares slope of log(value) against log(parameter), over samples with
// positive values. Empty when fewer than two qualify.
std::optional<double> fit_decay_exponent(std::span<const ReportSample> samples);

// Deterministic per-stream seed derivation (splitmix64).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace tcone
