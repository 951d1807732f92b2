#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "babcubic/exact_number.hpp"

namespace babcubic {

/// Positional base-60 form of a number with a finite expansion.
///
/// `integer_digits` is most-significant first and is `{0}` for values below
/// one; `fraction_digits` carries no trailing zero and is empty for integers.
struct SexForm {
  int sign = 1;
  std::vector<unsigned> integer_digits{0};
  std::vector<unsigned> fraction_digits;

  ExactNumber value() const;
  friend bool operator==(const SexForm&, const SexForm&) = default;
};

/// How a literal without ";" is read. Tablet tables usually omit the radix
/// point; `Fraction` reads "7,30" as 0;7,30.
enum class LiteralPlacement { Integer, Fraction };

/// How a value is rendered. `Integer` requires an integral value and fails
/// with NotInteger otherwise; `FractionAuto` emits ";" only when needed.
enum class Placement { Integer, FractionAuto };

// Grammar: ["-"] digits [";" digits], digits := digit ("," digit)*, each
// digit a decimal number 0..59.
ExactNumber parse_number(std::string_view text,
                         LiteralPlacement placement = LiteralPlacement::Integer);

// Sexagesimal literal, or a decimal fraction "p/q" / mixed number "w p/q".
ExactNumber parse_literal(std::string_view text);

// True when `text` looks like a number literal rather than a name.
bool looks_like_literal(std::string_view text);

SexForm to_sex_form(const ExactNumber& x);
std::string render_number(const ExactNumber& x,
                          Placement placement = Placement::FractionAuto);

// Sexagesimal when the expansion is finite, "p/q" otherwise.
std::string render_or_fraction(const ExactNumber& x);

enum class ArithmeticOp { Add, Sub, Mul, Div };
ExactNumber arithmetic(const ExactNumber& a, const ExactNumber& b,
                       ArithmeticOp op);

// 1/x. Exact for every nonzero rational; regularity is the caller's concern.
ExactNumber reciprocal(const ExactNumber& x);

// Prime factors of numerator and denominator all lie in {2, 3, 5}.
bool is_regular(const ExactNumber& x);
bool is_regular_integer(Integer n);

}  // namespace babcubic
