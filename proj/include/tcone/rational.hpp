#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tcone {

// Exact rational number, always in lowest terms with a positive denominator.
// Thin value wrapper over GMP's mpq_class so that expression templates never
// leak into the polynomial code.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p" or "p/q" with an optional leading sign; throws tcone::Error on
  // malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator_string() const { return value_.get_num().get_str(); }
  std::string denominator_string() const { return value_.get_den().get_str(); }
  std::string to_string() const;
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws tcone::Error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned exponent) const;
  Rational abs() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace tcone
