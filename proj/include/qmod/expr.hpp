#pragma once

#include <string>

#include "qmod/element.hpp"

namespace qmod {

// Expression grammar over a fixed carrier:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('·' factor)*
//   factor := ['-'] atom ('*' | '^*')*
//   atom   := p['/'q] | 'i' | x<k> | g<k> | '(' expr ')'
//           | E '[' r ',' c ']' '(' expr ')'      (matrix carriers)
//           | pair '(' expr ',' expr ')'          (complexified carriers)
// x<k> is 1-based (x1..xk); g<k> and E-indices are 0-based.  Inside E[...]
// and pair(...) the inner carrier's grammar applies.
StarElement parse_expression(const std::string& text, const Carrier& c);

// Canonical rendering; parse_expression(print_expression(a)) == a exactly.
std::string print_expression(const StarElement& a);

// The expression string of a single basis word (used as form JSON keys).
std::string print_word(const Carrier& c, const BasisWord& w);

// Carrier specification strings:
//   free:k | cyclic:n | dihedral:n | symmetric:n | quaternion:8
//   | table:<path or inline {...} JSON> | matrix:<n>:<inner> | complex:<inner>
Carrier parse_carrier_spec(const std::string& spec);
std::string carrier_spec_string(const Carrier& c);

}  // namespace qmod
