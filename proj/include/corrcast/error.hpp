#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace corrcast {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, wrong field types).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document describing an invalid object.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class CycleError : public SemanticError {
 public:
  CycleError(std::string message, std::vector<std::string> cycle)
      : SemanticError(std::move(message)), cycle_(std::move(cycle)) {}

  /// Node identifiers along one directed cycle, in edge order.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

/// Source model violating its invariants.
class ModelError : public Error {
 public:
  enum class Kind { normalization, arity, alphabet, negative, duplicate };

  ModelError(Kind kind, std::string message) : Error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured size bound (subset enumeration, decoder enumeration, index size) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace corrcast
