#include <algorithm>
#include <cmath>
#include <limits>

#include "compiled.hpp"
#include "tcone/error.hpp"
#include "tcone/numeric.hpp"

namespace tcone {

namespace {

constexpr int kMaxSweeps = 500;

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc(0.0, 0.0);
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

// Positive root of x^m = sum_{k<m} |c_k| x^k for monic c; every root of c has
// modulus at most this value.
double cauchy_radius(std::span<const Complex> monic) {
  const std::size_t m = monic.size() - 1;
  double hi = 1.0;
  for (std::size_t k = 0; k < m; ++k) hi = std::max(hi, 1.0 + std::abs(monic[k]));
  // sum |c_k| x^(k-m) is decreasing in x and crosses 1 exactly at the radius.
  const auto excess = [&](double logx) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      s += std::abs(monic[k]) * std::exp((static_cast<double>(k) - static_cast<double>(m)) * logx);
    }
    return s - 1.0;
  };
  double lo_log = std::log(std::numeric_limits<double>::min()) / 2.0;
  double hi_log = std::log(hi);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo_log + hi_log);
    if (excess(mid) > 0.0) {
      lo_log = mid;
    } else {
      hi_log = mid;
    }
  }
  return std::exp(hi_log);
}

double backward_residual(std::span<const Complex> coeffs, Complex z) {
  double scale = 0.0;
  double power = 1.0;
  const double r = std::abs(z);
  for (const auto& c : coeffs) {
    scale += std::abs(c) * power;
    power *= r;
  }
  const double value = std::abs(horner(coeffs, z));
  return scale > 0.0 ? value / scale : value;
}

}  // namespace

RootsResult roots_univariate(std::span<const Complex> coeffs, double tol) {
  if (coeffs.size() < 2) throw Error("roots_univariate: polynomial degree must be at least 1");
  double max_mag = 0.0;
  for (const auto& c : coeffs) max_mag = std::max(max_mag, std::abs(c));
  const Complex lead = coeffs.back();
  if (!(std::abs(lead) > 1e-30 * max_mag)) throw Error("roots_univariate: degenerate leading coefficient");

  std::vector<Complex> monic(coeffs.begin(), coeffs.end());
  for (auto& c : monic) c /= lead;

  RootsResult result;
  std::size_t zeros = 0;
  while (zeros + 1 < monic.size() && monic[zeros] == Complex(0.0, 0.0)) ++zeros;
  result.roots.assign(zeros, Complex(0.0, 0.0));
  const std::span<const Complex> deflated(monic.data() + zeros, monic.size() - zeros);
  const std::size_t m = deflated.size() - 1;

  result.converged = true;
  if (m > 0) {
    const double rho = cauchy_radius(deflated);
    std::vector<Complex> z(m);
    const Complex seed(0.4, 0.9);
    Complex power(1.0, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
      z[k] = rho * power;
      power *= seed;
    }
    result.converged = false;
    for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
      double max_correction = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        Complex denom(1.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
          if (j != i) denom *= z[i] - z[j];
        }
        if (denom == Complex(0.0, 0.0)) denom = Complex(rho * 1e-12, 0.0);
        const Complex delta = horner(deflated, z[i]) / denom;
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) continue;
        z[i] -= delta;
        max_correction = std::max(max_correction, std::abs(delta));
      }
      result.sweeps = sweep;
      if (max_correction <= tol * rho) {
        result.converged = true;
        break;
      }
    }
    result.roots.insert(result.roots.end(), z.begin(), z.end());
  }
  for (const auto& r : result.roots) result.residuals.push_back(backward_residual(coeffs, r));
  return result;
}

}  // namespace tcone
