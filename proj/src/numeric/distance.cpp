#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <Eigen/Dense>

#include "compiled.hpp"
#include "random.hpp"
#include "tcone/error.hpp"
#include "tcone/numeric.hpp"

namespace tcone {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kRankTolerance = 1e-8;

// Generators with their formal partial derivatives, evaluated on the
// real-ified coordinates (re z_0, im z_0, re z_1, ...).
class System {
 public:
  explicit System(std::span<const Polynomial> generators) : n_(generators.front().nvars()) {
    for (const auto& g : generators) {
      values_.emplace_back(g);
      degrees_.push_back(static_cast<double>(total_degree(g)));
      std::vector<detail::CompiledPolynomial> row;
      for (std::size_t k = 0; k < n_; ++k) row.emplace_back(differentiate(g, k));
      partials_.push_back(std::move(row));
    }
  }

  std::size_t nvars() const { return n_; }
  std::size_t equations() const { return values_.size(); }

  static std::vector<Complex> to_complex(const VectorXd& u) {
    std::vector<Complex> z(static_cast<std::size_t>(u.size() / 2));
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = Complex(u[2 * k], u[2 * k + 1]);
    return z;
  }

  static VectorXd to_real(std::span<const Complex> z) {
    VectorXd u(2 * static_cast<Eigen::Index>(z.size()));
    for (std::size_t k = 0; k < z.size(); ++k) {
      u[2 * k] = z[k].real();
      u[2 * k + 1] = z[k].imag();
    }
    return u;
  }

  std::vector<Complex> values(std::span<const Complex> z) const {
    std::vector<Complex> out;
    for (const auto& g : values_) out.push_back(g(z));
    return out;
  }

  // Complex gradient of generator i.
  std::vector<Complex> gradient(std::size_t i, std::span<const Complex> z) const {
    std::vector<Complex> out;
    for (const auto& d : partials_[i]) out.push_back(d(z));
    return out;
  }

  // Every |g_i(z)| / max(1, |z|)^{d_i} below tol.
  bool certified(std::span<const Complex> z, double tol) const {
    double norm = 0.0;
    for (const auto& c : z) norm += std::norm(c);
    const double base = std::max(1.0, std::sqrt(norm));
    for (std::size_t i = 0; i < values_.size(); ++i) {
      const double r = std::abs(values_[i](z)) / std::pow(base, degrees_[i]);
      if (!(r < tol)) return false;
    }
    return true;
  }

  double degree(std::size_t i) const { return degrees_[i]; }

 private:
  std::size_t n_;
  std::vector<detail::CompiledPolynomial> values_;
  std::vector<std::vector<detail::CompiledPolynomial>> partials_;
  std::vector<double> degrees_;
};

bool finite(const VectorXd& v) { return v.allFinite(); }

// Residuals and Jacobian with row i divided by weight[i]. Holomorphy gives the
// real Jacobian block [[a, -b], [b, a]] for each complex partial a + ib.
void linearize(const System& sys, const VectorXd& u, std::span<const double> weight, VectorXd& r, MatrixXd& jac) {
  const auto z = System::to_complex(u);
  const auto vals = sys.values(z);
  const auto m = static_cast<Eigen::Index>(sys.equations());
  const auto n = static_cast<Eigen::Index>(sys.nvars());
  r.resize(2 * m);
  jac.setZero(2 * m, 2 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double w = weight[static_cast<std::size_t>(i)];
    if (w == 0.0) {
      r[2 * i] = r[2 * i + 1] = 0.0;
      continue;
    }
    r[2 * i] = vals[static_cast<std::size_t>(i)].real() / w;
    r[2 * i + 1] = vals[static_cast<std::size_t>(i)].imag() / w;
    const auto grad = sys.gradient(static_cast<std::size_t>(i), z);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Complex d = grad[static_cast<std::size_t>(k)] / w;
      jac(2 * i, 2 * k) = d.real();
      jac(2 * i, 2 * k + 1) = -d.imag();
      jac(2 * i + 1, 2 * k) = d.imag();
      jac(2 * i + 1, 2 * k + 1) = d.real();
    }
  }
}

// Damped least squares on the degree-normalized residuals.
std::optional<VectorXd> land(const System& sys, VectorXd u, const DistanceOptions& opt) {
  const double base = std::max(1.0, u.norm());
  std::vector<double> weight;
  for (std::size_t i = 0; i < sys.equations(); ++i) weight.push_back(std::pow(base, sys.degree(i)));

  VectorXd r;
  MatrixXd jac;
  double damping = opt.initial_damping;
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (sys.certified(System::to_complex(u), opt.residual_tolerance)) return u;
    linearize(sys, u, weight, r, jac);
    if (!finite(r) || !jac.allFinite()) return std::nullopt;
    const double cost = r.squaredNorm();
    const MatrixXd normal = jac.transpose() * jac;
    const VectorXd gradient = jac.transpose() * r;
    double scale = normal.diagonal().maxCoeff();
    if (!(scale > 0.0)) return std::nullopt;

    bool accepted = false;
    while (damping < 1e16) {
      MatrixXd lhs = normal;
      lhs.diagonal().array() += damping * scale;
      const VectorXd step = lhs.ldlt().solve(-gradient);
      const VectorXd trial = u + step;
      VectorXd r_trial;
      MatrixXd unused;
      linearize(sys, trial, weight, r_trial, unused);
      if (finite(trial) && finite(r_trial) && r_trial.squaredNorm() < cost) {
        u = trial;
        damping = std::max(damping / 10.0, 1e-15);
        accepted = true;
        break;
      }
      damping *= 10.0;
    }
    if (!accepted) break;
  }
  if (sys.certified(System::to_complex(u), opt.residual_tolerance)) return u;
  return std::nullopt;
}

// Row weights equal to the gradient norms; rows with a vanishing gradient are
// dropped (weight 0).
std::vector<double> gradient_weights(const System& sys, const VectorXd& u) {
  const auto z = System::to_complex(u);
  std::vector<double> w;
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    double s = 0.0;
    for (const auto& d : sys.gradient(i, z)) s += std::norm(d);
    w.push_back(s > 0.0 && std::isfinite(s) ? std::sqrt(s) : 0.0);
  }
  return w;
}

// Gauss-Newton with minimum-norm steps back onto the variety.
std::optional<VectorXd> project(const System& sys, VectorXd u, const DistanceOptions& opt) {
  VectorXd r;
  MatrixXd jac;
  for (int it = 0; it < 60; ++it) {
    if (sys.certified(System::to_complex(u), opt.residual_tolerance)) return u;
    linearize(sys, u, gradient_weights(sys, u), r, jac);
    if (!finite(r) || !jac.allFinite()) return std::nullopt;
    Eigen::JacobiSVD<MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(kRankTolerance);
    const VectorXd step = svd.solve(-r);
    if (!finite(step)) return std::nullopt;
    u += step;
  }
  if (sys.certified(System::to_complex(u), opt.residual_tolerance)) return u;
  return std::nullopt;
}

// Moves a certified point along the tangent space toward the target and
// re-projects, accepting only strict distance decreases. Converges to a local
// minimizer of the distance on the branch the point sits on.
VectorXd refine(const System& sys, VectorXd u, const VectorXd& target, const DistanceOptions& opt) {
  const double scale = std::max(1.0, target.norm());
  VectorXd r;
  MatrixXd jac;
  for (int it = 0; it < opt.refine_iterations; ++it) {
    linearize(sys, u, gradient_weights(sys, u), r, jac);
    if (!jac.allFinite()) break;
    Eigen::JacobiSVD<MatrixXd> svd(jac, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double top = sv.size() > 0 ? sv[0] : 0.0;
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv[rank] > kRankTolerance * top) ++rank;
    const MatrixXd tangent = svd.matrixV().rightCols(u.size() - rank);
    const VectorXd step = tangent * (tangent.transpose() * (target - u));
    if (step.norm() <= 1e-12 * scale) break;

    const double current = (target - u).norm();
    bool accepted = false;
    double alpha = 1.0;
    for (int h = 0; h < 40 && !accepted; ++h, alpha *= 0.5) {
      const auto candidate = project(sys, u + alpha * step, opt);
      if (candidate && (target - *candidate).norm() < current) {
        u = *candidate;
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  return u;
}

}  // namespace

DistanceEstimate estimate_distance_upper(std::span<const Polynomial> generators, const ComplexPoint& x0,
                                         const DistanceOptions& options) {
  if (generators.empty()) throw Error("estimate_distance_upper: no generators");
  for (const auto& g : generators) {
    if (g.is_zero()) throw ZeroPolynomial("estimate_distance_upper: zero generator");
    if (g.nvars() != x0.size()) throw Error("estimate_distance_upper: point has wrong number of coordinates");
  }
  DistanceEstimate best;
  best.bound = std::numeric_limits<double>::infinity();
  for (const auto& g : generators) {
    if (g.is_constant()) return best;  // empty variety
  }

  const System sys(generators);
  const VectorXd target = System::to_real(x0.coords);
  const double radius = options.perturbation_radius * std::max(1.0, x0.norm());

  for (int run = 0; run <= options.perturbations; ++run) {
    VectorXd start = target;
    if (run > 0) {
      detail::Stream stream(split_seed(options.seed, static_cast<std::uint64_t>(run)));
      VectorXd w(target.size());
      for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = stream.gaussian();
      start += radius * w / w.norm();
    }
    const auto landed = land(sys, start, options);
    if (!landed) continue;
    const VectorXd refined = refine(sys, *landed, target, options);
    ++best.converged_runs;
    const double d = (target - refined).norm();
    if (d < best.bound) {
      best.bound = d;
      best.landed = ComplexPoint(System::to_complex(refined));
    }
    if (best.bound == 0.0) break;
  }
  best.converged = best.converged_runs > 0;
  return best;
}

}  // namespace tcone
