#pragma once

#include <string_view>

#include "babcubic/exact_number.hpp"

namespace babcubic {

// Evaluates a calculator expression over exact numbers:
//
//   expr  := term (("+" | "-") term)*
//   term  := unary (("*" | "/") unary)*
//   unary := "-" unary | func unary | primary
//   func  := igi | square | cuberoot | basi2
//   primary := number | "(" expr ")"
//
// Numbers use the sexagesimal notation ("1;30", "33,22"). "p/q" reads as a
// division and so denotes the same value as a fraction literal.
ExactNumber evaluate_expression(std::string_view text);

}  // namespace babcubic
