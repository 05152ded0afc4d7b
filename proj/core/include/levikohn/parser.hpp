#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "levikohn/error.hpp"
#include "levikohn/gaussian_rational.hpp"
#include "levikohn/polynomial.hpp"

namespace levikohn {

// Syntax or semantic error in an expression; line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Grammar:
//   expr   := sum
//   sum    := ['+'|'-'] term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*     divisors must be nonzero constants
//   unary  := ('+'|'-') unary | power
//   power  := atom ['^' integer]
//   atom   := integer | 'i' | var | 'conj' '(' expr ')' | '(' expr ')'
//
// With stem "z", var is z1..zn, x1..xn or y1..yn (x and y expand to
// (z±conj z)/2 and (z-conj z)/(2i)). With stem "w", var is w1..wn.
// Decimal literals are rejected.
struct ParseOptions {
  std::size_t dim = 0;  // 0: infer from the largest variable index
  std::string var = "z";
};

Polynomial parse_expression(std::string_view text, const ParseOptions& opts = {});
Polynomial parse_expression(std::string_view text, std::size_t dim);

// Accepts an optional leading "r =" and requires the result to be real.
Polynomial parse_defining_function(std::string_view text, std::size_t dim = 0);

// A constant expression such as "1/2 - 3*i/4".
GaussianRational parse_constant(std::string_view text);

}  // namespace levikohn
