#ifndef PFOL_POLYIO_HPP
#define PFOL_POLYIO_HPP

#include <string>

#include "pfol/multipoly.hpp"

namespace pfol {

// Polynomial text grammar (whitespace ignored everywhere):
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := nat | 'g' ('^' nat)? | '[' nat (',' nat)* ']' | varpow
//   varpow := ('x'|'y'|'z') ('^' nat)?
// 'g' is the class of the modulus variable in an extension field. The '*'
// between factors is optional on input; canonical output always writes it.
// Syntax errors carry line and column.
MultiPoly parse_poly(const std::string& text, const Field& f, int nvars = 3);

// element text: integer, g^e, or [c0,c1,...]
FieldElement parse_element(const std::string& text, const Field& f);

std::string element_to_string(const FieldElement& e);

// modulus of an extension field rendered in the variable g
std::string modulus_to_string(const Field& f);

} // namespace pfol

#endif
