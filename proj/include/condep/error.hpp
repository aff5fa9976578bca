#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condep {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An attribute set is not contained in a relation's schema, or a statement
// does not cover the schema it is checked against.
class SchemaError : public Error {
public:
  using Error::Error;
};

// Arithmetic outside the operation's domain (reciprocal of zero, a
// non-positive weight handed to a GMVD or CI checker).
class DomainError : public Error {
public:
  using Error::Error;
};

// Malformed arguments: overlapping statement components, axiom parameters
// that are not subsets, ill-formed cover queries.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A configured enumeration or search bound was exceeded.
class ResourceError : public Error {
public:
  using Error::Error;
};

// Input text that does not parse. Carries the location so front ends can
// point at the offending token.
class ParseError : public Error {
public:
  ParseError(std::string message, std::string source, std::size_t line,
             std::size_t column, std::string token);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

} // namespace condep
