#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace batir {

// Syntax error from the expression parser, with 1-based position info and
// the token classes that would have been accepted at that point.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line_, int col_, std::vector<std::string> expected_)
      : std::runtime_error(std::move(msg)), line(line_), col(col_), expected(std::move(expected_)) {}
  int line;
  int col;
  std::vector<std::string> expected;
};

enum class EvalErrorKind {
  DivByZero,
  SingularShift,
  UnboundVar,
  NonIntegerExponent,
  NegativeKernelIndex,
  NonIntegerIndex,
};

inline const char* to_string(EvalErrorKind k) {
  switch (k) {
    case EvalErrorKind::DivByZero: return "DivByZero";
    case EvalErrorKind::SingularShift: return "SingularShift";
    case EvalErrorKind::UnboundVar: return "UnboundVar";
    case EvalErrorKind::NonIntegerExponent: return "NonIntegerExponent";
    case EvalErrorKind::NegativeKernelIndex: return "NegativeKernelIndex";
    case EvalErrorKind::NonIntegerIndex: return "NonIntegerIndex";
  }
  return "?";
}

// Runtime evaluation failure; `context` names the offending subexpression
// and the index values in scope when it was raised.
struct EvalError : std::runtime_error {
  EvalError(EvalErrorKind kind_, std::string detail_, std::string context_ = {})
      : std::runtime_error(std::string(to_string(kind_)) + ": " + detail_ +
                           (context_.empty() ? "" : " [" + context_ + "]")),
        kind(kind_), detail(std::move(detail_)), context(std::move(context_)) {}
  EvalErrorKind kind;
  std::string detail;
  std::string context;
};

// Raised when a suite filter selects no catalog entry.
struct UnknownIdentity : std::runtime_error {
  explicit UnknownIdentity(const std::string& pattern)
      : std::runtime_error("no identity matches '" + pattern + "'") {}
};

}  // namespace batir
