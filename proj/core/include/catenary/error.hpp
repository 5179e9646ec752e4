#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catenary {

/// Failure categories surfaced by the library. The command line tool maps
/// these onto process exit codes.
enum class ErrorKind {
  context,           // operands live in different variable contexts / fields
  parameter,         // an argument violates a documented precondition
  degenerate_input,  // e.g. a regularity test for an element of the ideal
  undefined_dimension,
  unsupported_input, // input class outside what the engine can certify
  resource,          // a configured search or step budget was exhausted
  infeasible,        // a constructive search found no admissible choice
  parse,
  internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ContextError : public Error {
 public:
  explicit ContextError(const std::string& what) : Error(ErrorKind::context, what) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(ErrorKind::parameter, what) {}
};

class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : Error(ErrorKind::degenerate_input, what) {}
};

class UndefinedDimensionError : public Error {
 public:
  explicit UndefinedDimensionError(const std::string& what)
      : Error(ErrorKind::undefined_dimension, what) {}
};

class UnsupportedInputError : public Error {
 public:
  explicit UnsupportedInputError(const std::string& what)
      : Error(ErrorKind::unsupported_input, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(const std::string& what, std::size_t step)
      : Error(ErrorKind::infeasible, what), step_(step) {}

  /// 1-based index of the chain link that could not be chosen.
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace catenary
