#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "compiled.hpp"
#include "tcone/error.hpp"
#include "tcone/numeric.hpp"

namespace tcone {

namespace detail {

std::complex<double> ipow(std::complex<double> base, std::uint32_t exponent) {
  std::complex<double> result(1.0, 0.0);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

CompiledPolynomial::CompiledPolynomial(const Polynomial& f) : nvars_(f.nvars()) {
  terms_.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    terms_.push_back({m.exponents(), c.to_double()});
    degree_ = std::max(degree_, m.degree());
    for (auto e : m.exponents()) max_exponent_ = std::max(max_exponent_, e);
  }
}

std::complex<double> CompiledPolynomial::operator()(std::span<const std::complex<double>> z) const {
  // Small power tables: one row per variable up to the largest exponent.
  std::vector<std::complex<double>> powers(nvars_ * (max_exponent_ + 1));
  for (std::size_t i = 0; i < nvars_; ++i) {
    auto* row = &powers[i * (max_exponent_ + 1)];
    row[0] = 1.0;
    for (std::uint32_t e = 1; e <= max_exponent_; ++e) row[e] = row[e - 1] * z[i];
  }
  std::complex<double> sum(0.0, 0.0);
  for (const auto& t : terms_) {
    std::complex<double> v(t.coefficient, 0.0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.exps[i] != 0) v *= powers[i * (max_exponent_ + 1) + t.exps[i]];
    }
    sum += v;
  }
  return sum;
}

}  // namespace detail

double ComplexPoint::norm() const {
  double s = 0.0;
  for (const auto& c : coords) s += std::norm(c);
  return std::sqrt(s);
}

ComplexPoint ComplexPoint::scaled(double t) const {
  ComplexPoint out(coords);
  for (auto& c : out.coords) c *= t;
  return out;
}

double distance(const ComplexPoint& a, const ComplexPoint& b) {
  if (a.size() != b.size()) throw Error("distance: points have different lengths");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a.coords[i] - b.coords[i]);
  return std::sqrt(s);
}

void TSchedule::validate() const {
  if (!(t0 > 0.0) || !std::isfinite(t0)) throw Error("schedule: t0 must be positive");
  if (!(factor > 1.0) || !std::isfinite(factor)) throw Error("schedule: factor must be greater than 1");
  if (steps < 1) throw Error("schedule: steps must be positive");
}

std::vector<double> TSchedule::values() const {
  validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) out.push_back(t0 * std::pow(factor, k));
  return out;
}

std::string_view to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::Ratio:
      return "ratio";
    case ReportKind::Distance:
      return "distance";
    case ReportKind::Sample:
      return "sample";
  }
  return "unknown";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Complex evaluate_complex(const Polynomial& f, const ComplexPoint& p) {
  if (p.size() != f.nvars()) throw Error("evaluate_complex: point has wrong number of coordinates");
  const Complex v = detail::CompiledPolynomial(f)(p.coords);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw NumericOverflow("evaluate_complex: value is not finite (overflow)");
  }
  return v;
}

std::vector<Complex> substitute_partial(const Polynomial& f, const std::map<std::string, Complex>& fixed,
                                        std::string_view free_var) {
  const auto& ctx = *f.context();
  const std::size_t free_index = ctx.index_of(free_var);
  if (free_index == ctx.size()) throw Error("substitute_partial: unknown free variable '" + std::string(free_var) + "'");
  if (fixed.size() != ctx.size() - 1) throw Error("substitute_partial: every variable except the free one must be fixed");
  std::vector<Complex> values(ctx.size());
  for (const auto& [name, value] : fixed) {
    const std::size_t i = ctx.index_of(name);
    if (i == ctx.size() || i == free_index) throw Error("substitute_partial: bad fixed variable '" + name + "'");
    values[i] = value;
  }

  std::vector<Complex> coeffs(1, Complex(0.0, 0.0));
  for (const auto& [m, c] : f.terms()) {
    Complex v(c.to_double(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != free_index && m[i] != 0) v *= detail::ipow(values[i], m[i]);
    }
    const std::size_t power = m[free_index];
    if (coeffs.size() <= power) coeffs.resize(power + 1, Complex(0.0, 0.0));
    coeffs[power] += v;
  }
  return coeffs;
}

std::optional<double> fit_decay_exponent(std::span<const ReportSample> samples) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& s : samples) {
    if (s.value > 0.0 && s.parameter > 0.0 && std::isfinite(s.value)) {
      pts.emplace_back(std::log(s.parameter), std::log(s.value));
    }
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

}  // namespace tcone
