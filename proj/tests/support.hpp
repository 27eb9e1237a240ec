#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tcone/polynomial.hpp"
#include "tcone/textio.hpp"

namespace tcone::testing {

inline ContextPtr ctx(std::vector<std::string> names) { return VariableContext::create(std::move(names)); }

inline ContextPtr xyz() {
  static const ContextPtr c = ctx({"x", "y", "z"});
  return c;
}

inline ContextPtr xy() {
  static const ContextPtr c = ctx({"x", "y"});
  return c;
}

inline Polynomial P(const std::string& text, const ContextPtr& c = xyz()) { return parse_polynomial(text, c); }

inline std::vector<Polynomial> Ps(std::initializer_list<const char*> texts, const ContextPtr& c = xyz()) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(t, c));
  return out;
}

inline std::vector<Rational> Q(std::initializer_list<std::int64_t> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

// Hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int height) {
    const int num = integer(-height, height);
    const int den = integer(1, height);
    return Rational(num, den);
  }

  Rational nonzero_rational(int height) {
    Rational r;
    while (r.is_zero()) r = rational(height);
    return r;
  }

  Monomial monomial(std::size_t nvars, int max_degree) {
    std::vector<Monomial::Exponent> e(nvars, 0);
    int budget = integer(0, max_degree);
    for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(nvars) - 1))];
    return Monomial(std::move(e));
  }

  Polynomial polynomial(const ContextPtr& c, int max_degree, int max_terms, int height = 9) {
    Polynomial f(c);
    const int terms = integer(0, max_terms);
    for (int k = 0; k < terms; ++k) f += Polynomial::term(c, monomial(c->size(), max_degree), rational(height));
    return f;
  }

  Polynomial nonzero_polynomial(const ContextPtr& c, int max_degree, int max_terms, int height = 9) {
    Polynomial f(c);
    while (f.is_zero()) f = polynomial(c, max_degree, max_terms, height);
    return f;
  }

  std::vector<Rational> point(std::size_t n, int height) {
    std::vector<Rational> p;
    for (std::size_t k = 0; k < n; ++k) p.push_back(rational(height));
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tcone::testing
