#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain: unknown ids, mixed parents,
/// a vertex set that is not hereditary, a ring that is not a field, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force search or oracle hit its configured size limit. This never
/// means the searched-for object does not exist.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line` is 1-based (0 when not line oriented) and
/// `column` is a 0-based character offset (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lpa
