// SPDX-License-Identifier: Apache-2.0

#ifndef OPPM_ERROR_HPP
#define OPPM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oppm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty pattern, bad generator
/// parameters, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A tree or DAG failed structural validation. `offending_id()` names the
/// node or vertex that triggered the failure; `offending_edge()` is the index
/// of the input edge at fault, or kNoEdge when no single edge is.
class ValidationError : public Error {
 public:
  static constexpr std::size_t kNoEdge = static_cast<std::size_t>(-1);

  ValidationError(const std::string& what, std::size_t offending_id,
                  std::size_t offending_edge = kNoEdge)
      : Error(what), offending_id_(offending_id), offending_edge_(offending_edge) {}

  std::size_t offending_id() const noexcept { return offending_id_; }
  std::size_t offending_edge() const noexcept { return offending_edge_; }

 private:
  std::size_t offending_id_;
  std::size_t offending_edge_;
};

/// A brute-force oracle refused an input larger than its size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Carries the file name and 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) +
              ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace oppm

#endif  // OPPM_ERROR_HPP
