#pragma once

#include "hyperzeta/pbw.hpp"
#include "hyperzeta/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperzeta::cli {

/// Syntax error with the zero-based byte offset where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::invalid_argument("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Raised when an intermediate normal form exceeds the term cap.
class TermLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for well-formed input that has no value, such as F^-1.
class EvalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Expr {
  enum class Kind { add, sub, mul, neg, pow, E, F, K, B, E_div, F_div, rational, zeta };

  Kind kind;
  std::size_t offset = 0;
  std::int64_t n = 0;  // exponent for pow, index for divided powers
  Rat value;           // literal for rational
  std::vector<std::unique_ptr<Expr>> args;

  /// Fully parenthesized rendering, for diagnostics and tests.
  std::string to_string() const;
};

/// Grammar, whitespace insensitive:
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' integer)?
///   atom   := 'E' | 'F' | 'K' | 'B' | 'E^(' nat ')' | 'F^(' nat ')'
///           | rational | 'z' | '(' expr ')'
/// K^-1 is a K atom raised to -1. Negative exponents are accepted for
/// invertible values only (powers of K, nonzero scalars).
std::unique_ptr<Expr> parse(std::string_view input);

/// Normal form of a parsed expression over Q(zeta_l). Throws
/// TermLimitExceeded when any intermediate result has more than max_terms
/// monomials.
PBWElem evaluate(const Expr& e, int ell, std::size_t max_terms = 10000);

}  // namespace hyperzeta::cli
