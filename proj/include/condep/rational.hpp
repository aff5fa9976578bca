#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace condep {

/// Exact rational number with arbitrary-precision numerator and
/// denominator. Always held in lowest terms with a positive denominator.
class Rational {
public:
  using Integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
  Rational(std::int64_t numerator, std::int64_t denominator);
  Rational(const Integer& numerator, const Integer& denominator);

  /// Parses an integer literal or `p/q`. Surrounding whitespace is not
  /// accepted; callers trim. Throws ValidationError on malformed text or a
  /// zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const;
  int sign() const;

  /// Throws DomainError when *this is zero.
  Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// `p` for integers, `p/q` otherwise. Inverse of parse().
  std::string str() const;

private:
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace condep
