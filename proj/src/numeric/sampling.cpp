#include <cmath>

#include "random.hpp"
#include "tcone/error.hpp"
#include "tcone/numeric.hpp"

namespace tcone {

SampleResult sample_far_directions(const Polynomial& f, double radius, int trials, std::uint64_t seed) {
  const auto& ctx = *f.context();
  const std::size_t n = ctx.size();
  if (n < 2) throw Error("sample_far_directions: needs at least two variables");
  if (f.is_constant()) throw Error("sample_far_directions: polynomial must be nonconstant");
  if (!(radius > 0.0)) throw Error("sample_far_directions: radius must be positive");
  if (trials < 1) throw Error("sample_far_directions: trials must be positive");

  SampleResult out;
  out.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t free_index = static_cast<std::size_t>(trial) % n;
    detail::Stream stream(split_seed(seed, static_cast<std::uint64_t>(trial)));

    std::map<std::string, Complex> fixed;
    std::vector<Complex> point(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == free_index) continue;
      point[i] = radius * stream.unit_complex();
      fixed.emplace(ctx.name(i), point[i]);
    }

    std::vector<Complex> coeffs = substitute_partial(f, fixed, ctx.name(free_index));
    double max_mag = 0.0;
    for (const auto& c : coeffs) max_mag = std::max(max_mag, std::abs(c));
    while (coeffs.size() > 1 && !(std::abs(coeffs.back()) > 1e-30 * max_mag)) coeffs.pop_back();
    if (coeffs.size() < 2) {
      ++out.skipped;
      continue;
    }

    const RootsResult roots = roots_univariate(coeffs);
    if (!roots.converged) ++out.unconverged;
    for (const auto& root : roots.roots) {
      point[free_index] = root;
      ComplexPoint p(point);
      const double norm = p.norm();
      if (!(norm >= radius) || !std::isfinite(norm)) {
        ++out.discarded;
        continue;
      }
      out.directions.push_back(p.scaled(1.0 / norm));
    }
  }
  return out;
}

}  // namespace tcone
