#pragma once

#include <string>

#include "monoalg/poly.hpp"

namespace monoalg {

// Polynomial grammar: sums of terms in the variable X, nonnegative integer
// coefficients reduced mod p, `*` optional between a coefficient and X,
// parenthesized subexpressions with products and powers allowed, e.g.
// "(X^2+X+1)^2". Over an extension field the symbol `a` denotes the class
// of Y, so coefficients can be written "(a+1)*X^2 + a".
// Throws ParseError on malformed input.
Polynomial parse_polynomial(const std::string& text, const FieldPtr& field);

// Inverses of the grammar: terms in descending degree, multi-term
// coefficients parenthesized.
std::string to_string(const Polynomial& f);
std::string to_string(const FieldElement& x);

}  // namespace monoalg
