#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyharm {

/// Argument outside the mathematical domain of an operation (n < 2, x not in
/// the rotated ball, |w| >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A kernel denominator vanished (or came within the singularity threshold).
class SingularEvaluation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failure while evaluating an integrand; carries the node that failed.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, std::size_t node)
      : std::runtime_error(what + " (node " + std::to_string(node) + ")"), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polyharm
