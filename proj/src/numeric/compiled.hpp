#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "tcone/polynomial.hpp"

namespace tcone::detail {

// Double-precision copy of a polynomial for repeated floating evaluation.
class CompiledPolynomial {
 public:
  explicit CompiledPolynomial(const Polynomial& f);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  // May return non-finite values; callers decide how to treat overflow.
  std::complex<double> operator()(std::span<const std::complex<double>> z) const;

 private:
  struct Term {
    std::vector<std::uint32_t> exps;
    double coefficient;
  };
  std::size_t nvars_;
  std::uint64_t degree_ = 0;
  std::uint32_t max_exponent_ = 0;
  std::vector<Term> terms_;
};

std::complex<double> ipow(std::complex<double> base, std::uint32_t exponent);

}  // namespace tcone::detail
