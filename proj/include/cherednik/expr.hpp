#pragma once

// Text form of algebra elements.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer ['/' integer] | 'z' | 'c1' | 'c[' k ']'
//            | 'x' i | 'y' i | 's(' i ',' j ';' k ')' | 'sg(' i ',' j ';' k ')'
//            | 't(' i ';' k ')' | '(' expr ')'
//
// z is zeta_m, s/sg/t take exponents of zeta_m. Adjacent group factors are
// multiplied before the membership check, so "s(1,2;0)*t(2;1)" is accepted in
// the braided kind. Printing (PBWElement::to_string) never emits parentheses.

#include <string>

#include "cherednik/pbw.hpp"

namespace cherednik {

// Throws ParseError with the offending position, also for letters outside the
// alphabet and group elements outside the group.
PBWElement parse_expression(const AlgebraPtr& alg, const std::string& text);

}  // namespace cherednik
