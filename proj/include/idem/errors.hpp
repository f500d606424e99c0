#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace idem {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside the carrier of its semiring, or an argument is out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is not defined for this kind of semiring (e.g. order on a field).
class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

/// The series 1 + a + a^2 + ... does not converge inside the carrier.
class StarUndefined : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SemiringMismatch : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownNode : public Error {
 public:
  using Error::Error;
};

/// Closure or iterative solve failed to stabilize. Carries the offending pivot
/// (or row) index and, once mapped back to a graph, the node name.
class NonStabilizing : public Error {
 public:
  NonStabilizing(const std::string& what, std::optional<std::size_t> index,
                 std::string location = {})
      : Error(what), index_(index), location_(std::move(location)) {}

  std::optional<std::size_t> index() const { return index_; }
  const std::string& location() const { return location_; }

 private:
  std::optional<std::size_t> index_;
  std::string location_;
};

/// Malformed text input. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace idem
