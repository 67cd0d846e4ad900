#pragma once

// Canonical text form for MultiPoly and the matching parser.
//
// Grammar emitted and accepted (whitespace free-form on input):
//
//   poly    := ['-'] term ( ('+'|'-') term )*
//   term    := factor ( ('*'|'/') factor )*
//   factor  := atom [ '^' uint ]
//   atom    := uint | 'k' | 's' | var | '(' poly ')' | '-' atom
//   var     := tag digit digit | 'dinv'      (tag in T Z W X Y D, any case)
//
// Output is deterministic: terms in graded-lex descending order (leading
// term first), each as coeff '*' var '^' e '*' ..., unit coefficients
// omitted, multi-term or fractional coefficients parenthesized, and a
// polynomial with no terms printed as "0".  Dividing by a subexpression
// that contains matrix variables is a domain_error; dividing by a field
// element is exact.

#include <string>

#include "hermop/multipoly.hpp"

namespace hermop {

std::string to_canonical_text(const MultiPoly& p);

MultiPoly parse_polynomial(const std::string& text);
MultiPoly parse_polynomial(const std::string& text, const VarUniverse& universe);

} // namespace hermop
