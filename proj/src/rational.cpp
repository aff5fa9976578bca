#include "condep/rational.hpp"

#include <cctype>
#include <ostream>

#include "condep/error.hpp"

namespace condep {

ParseError::ParseError(std::string message, std::string source, std::size_t line,
                       std::size_t column, std::string token)
    : Error(message), source_(std::move(source)), line_(line), column_(column),
      token_(std::move(token)) {}

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

Rational::Integer parse_integer(std::string_view text) {
  if (!text.empty() && text[0] == '+') text.remove_prefix(1);
  return Rational::Integer(std::string(text));
}

} // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  if (denominator < 0)
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  else
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text))
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    return Rational(boost::multiprecision::cpp_rational(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(num), d);
}

Rational::Integer Rational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

Rational::Integer Rational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

bool Rational::is_zero() const { return value_ == 0; }

int Rational::sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(1 / value_);
}

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
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(-value_); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  const auto den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.str();
}

} // namespace condep
