#include "tcone/rational.hpp"

#include <cctype>
#include <ostream>

#include "tcone/error.hpp"

namespace tcone {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpz has no int64 constructor on every platform; go through the string form.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error("rational with zero denominator '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return value_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace tcone
