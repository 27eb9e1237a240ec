#include <algorithm>
#include <cmath>
#include <sstream>

#include "compiled.hpp"
#include "tcone/error.hpp"
#include "tcone/numeric.hpp"

namespace tcone {

namespace {

void check_direction(std::span<const Polynomial> generators, const ComplexPoint& direction) {
  if (generators.empty()) throw Error("verification needs at least one generator");
  for (const auto& g : generators) {
    if (g.is_zero()) throw ZeroPolynomial("verification: zero generator");
    if (g.nvars() != direction.size()) throw Error("direction has wrong number of coordinates");
  }
  if (direction.norm() == 0.0) throw Error("direction must be nonzero");
}

bool is_plateau(std::span<const ReportSample> samples, double tolerance) {
  const std::size_t take = std::min<std::size_t>(3, samples.size());
  if (take < 2) return false;
  double lo = samples[samples.size() - take].value;
  double hi = lo;
  for (std::size_t k = samples.size() - take; k < samples.size(); ++k) {
    lo = std::min(lo, samples[k].value);
    hi = std::max(hi, samples[k].value);
  }
  return lo > 0.0 && (hi - lo) / hi < tolerance;
}

VerificationReport base_report(ReportKind kind, std::span<const Polynomial> generators,
                               const ComplexPoint& direction, const TSchedule& schedule) {
  VerificationReport report;
  report.kind = kind;
  report.variables = generators.front().context()->names();
  report.direction = direction;
  report.schedule = schedule;
  return report;
}

}  // namespace

VerificationReport loj_ratio_schedule(std::span<const Polynomial> generators, const ComplexPoint& direction,
                                      const TSchedule& schedule, const Thresholds& thresholds) {
  check_direction(generators, direction);
  VerificationReport report = base_report(ReportKind::Ratio, generators, direction, schedule);

  std::vector<detail::CompiledPolynomial> compiled;
  std::vector<double> inverse_degree;
  for (const auto& g : generators) {
    if (g.is_constant()) {
      report.verdict = Verdict::Inconclusive;
      report.diagnostics = "ideal contains a nonzero constant: the variety is empty";
      return report;
    }
    compiled.emplace_back(g);
    inverse_degree.push_back(1.0 / static_cast<double>(total_degree(g)));
  }

  for (double t : schedule.values()) {
    const ComplexPoint z = direction.scaled(t);
    double r = 0.0;
    for (std::size_t i = 0; i < compiled.size(); ++i) {
      const Complex v = compiled[i](z.coords);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        report.verdict = Verdict::Inconclusive;
        report.diagnostics = "overflow evaluating generator " + std::to_string(i + 1) + " at t=" + std::to_string(t);
        report.fitted_decay_exponent = fit_decay_exponent(report.samples);
        return report;
      }
      r = std::max(r, std::pow(std::abs(v), inverse_degree[i]) / t);
    }
    report.samples.push_back({t, r});
  }
  report.fitted_decay_exponent = fit_decay_exponent(report.samples);

  const auto& s = report.samples;
  const bool all_zero = std::all_of(s.begin(), s.end(), [](const ReportSample& x) { return x.value == 0.0; });
  bool strictly_decreasing = s.size() >= 2;
  for (std::size_t k = 1; k < s.size(); ++k) strictly_decreasing = strictly_decreasing && s[k].value < s[k - 1].value;

  std::ostringstream diag;
  if (all_zero) {
    report.verdict = Verdict::Pass;
    diag << "every generator vanishes along the ray";
  } else if (strictly_decreasing && s.back().value < thresholds.ratio_decay * s.front().value) {
    report.verdict = Verdict::Pass;
    diag << "ratio decreases strictly; last/first = " << s.back().value / s.front().value;
  } else {
    report.verdict = Verdict::Fail;
    diag << "ratio does not decay";
    if (is_plateau(s, thresholds.plateau_tolerance)) diag << "; plateau near " << s.back().value;
  }
  report.diagnostics = diag.str();
  return report;
}

VerificationReport distance_ratio_report(std::span<const Polynomial> generators, const ComplexPoint& direction,
                                 const TSchedule& schedule, const DistanceOptions& options,
                                 const Thresholds& thresholds) {
  check_direction(generators, direction);
  VerificationReport report = base_report(ReportKind::Distance, generators, direction, schedule);
  report.seed = options.seed;

  std::ostringstream diag;
  bool all_converged = true;
  const auto ts = schedule.values();
  for (std::size_t k = 0; k < ts.size(); ++k) {
    DistanceOptions step_options = options;
    step_options.seed = split_seed(options.seed, k);
    const DistanceEstimate est = estimate_distance_upper(generators, direction.scaled(ts[k]), step_options);
    if (!est.converged) {
      all_converged = false;
      diag << "no solver run converged at t=" << ts[k] << "; ";
      report.samples.push_back({ts[k], std::numeric_limits<double>::infinity()});
      continue;
    }
    report.samples.push_back({ts[k], est.bound / ts[k]});
  }
  report.fitted_decay_exponent = fit_decay_exponent(report.samples);

  const auto& s = report.samples;
  if (!all_converged) {
    report.verdict = Verdict::Inconclusive;
  } else if (std::all_of(s.begin(), s.end(), [&](const ReportSample& x) { return x.value < thresholds.zero_ratio; })) {
    report.verdict = Verdict::Pass;
    diag << "the ray lies on the variety up to solver tolerance";
  } else if (s.size() >= 2 && s.back().value <= thresholds.ratio_decay * s.front().value) {
    report.verdict = Verdict::Pass;
    diag << "distance ratio decays; last/first = " << s.back().value / s.front().value;
  } else if (is_plateau(s, thresholds.plateau_tolerance)) {
    report.verdict = Verdict::Fail;
    diag << "distance ratio plateaus near " << s.back().value;
  } else {
    report.verdict = Verdict::Inconclusive;
    diag << "distance ratio neither decays nor plateaus";
  }
  report.diagnostics = diag.str();
  return report;
}

VerificationReport sampling_report(const Polynomial& f, const ConeDescription& cone, double radius, int trials,
                                   std::uint64_t seed, const Thresholds& thresholds) {
  const SampleResult sampled = sample_far_directions(f, radius, trials, seed);
  VerificationReport report;
  report.kind = ReportKind::Sample;
  report.variables = f.context()->names();
  report.seed = seed;
  report.directions = sampled.directions;

  std::vector<detail::CompiledPolynomial> compiled;
  for (const auto& g : cone.generators.generators) compiled.emplace_back(g);

  std::size_t good = 0;
  for (const auto& u : sampled.directions) {
    double worst = 0.0;
    for (const auto& g : compiled) worst = std::max(worst, std::abs(g(u.coords)));
    report.samples.push_back({radius, worst});
    if (worst < thresholds.sample_residual) ++good;
  }

  std::ostringstream diag;
  diag << sampled.trials << " trials, " << sampled.directions.size() << " directions kept, " << sampled.skipped
       << " degenerate restrictions skipped, " << sampled.discarded << " roots below the radius, "
       << sampled.unconverged << " root solves unconverged";
  if (sampled.directions.empty()) {
    report.verdict = Verdict::Inconclusive;
  } else {
    const double fraction = static_cast<double>(good) / static_cast<double>(sampled.directions.size());
    diag << "; fraction within residual " << thresholds.sample_residual << ": " << fraction;
    report.verdict = fraction >= thresholds.sample_fraction ? Verdict::Pass : Verdict::Fail;
  }
  report.diagnostics = diag.str();
  return report;
}

}  // namespace tcone
