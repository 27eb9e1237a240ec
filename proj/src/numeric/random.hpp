#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace tcone::detail {

// mt19937_64 output is fixed by the standard; the conversions below avoid the
// implementation-defined distributions so that runs are bit-reproducible.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

  std::complex<double> unit_complex() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

  // Box-Muller pair, first value only.
  double gaussian() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * uniform());
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tcone::detail
