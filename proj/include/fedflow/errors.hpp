#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fedflow {

/// Malformed query text. Carries the 1-based line/column of the offending token.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Query is well-formed but meaningless (empty SERVICE, duplicate PREFIX,
/// projected variable bound nowhere, ...).
class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The query's join graph has no Cartesian-free left-deep order.
class DisconnectedQuery : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A runtime state the engine promises never to reach.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownOperator : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed line in a triple file.
class TripleParseError : public std::runtime_error {
 public:
  TripleParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A source endpoint could not be reached or failed mid-stream.
class SourceUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The remote endpoint answered with something we cannot parse.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An engine run returned answers different from the ground-truth oracle.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fedflow
