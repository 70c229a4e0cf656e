#ifndef HOMALOIDAL_ERRORS_HPP
#define HOMALOIDAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homaloidal {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidField : MathError {
  using MathError::MathError;
};

struct ParseError : MathError {
  ParseError(const std::string& msg, std::size_t pos)
      : MathError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

struct NotDivisible : MathError {
  using MathError::MathError;
};

struct NotZeroDimensional : MathError {
  using MathError::MathError;
};

struct NotDeterminantal : MathError {
  using MathError::MathError;
};

struct UndefinedMap : MathError {
  using MathError::MathError;
};

struct ConcurrentArrangement : MathError {
  using MathError::MathError;
};

struct FieldTooSmall : MathError {
  using MathError::MathError;
};

// Two independent computation routes disagreed; CLI maps this to exit code 1.
struct InconsistentResult : MathError {
  using MathError::MathError;
};

struct DegenerateSection : MathError {
  using MathError::MathError;
};

struct Inconclusive : MathError {
  using MathError::MathError;
};

struct BudgetExceeded : MathError {
  using MathError::MathError;
};

}  // namespace homaloidal

#endif
