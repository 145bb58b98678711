#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckbound {

/// Bad argument to a constructor or operation (maps to CLI exit code 2).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset()` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The eigensolver failed to converge within its sweep budget.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// SRG parameters or an intersection array that cannot belong to a graph.
class InfeasibleParameters : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result contradicts a proven fact (e.g. the Nikiforov upper bound).
/// Always a bug in the computation, never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Reproduced bound table disagrees with the published values.
class TableMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ckbound
