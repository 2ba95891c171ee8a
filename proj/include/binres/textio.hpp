#ifndef BINRES_TEXTIO_HPP
#define BINRES_TEXTIO_HPP

#include <binres/rationalfn.hpp>
#include <binres/vartable.hpp>

#include <string>

namespace binres {

// Canonical text: terms in descending graded lex, integer coefficients,
// explicit `*` between factors and `^` for powers, e.g.
//   x1^2*y1 - 2*x2*y1^2
// A rational function prints as NUM or NUM/(DEN) with both sides expanded.
std::string to_text(const LaurentPolynomial& p, const VarTable& vt);
std::string to_text(const RationalFunction& f, const VarTable& vt);

// General expression parser over x1..xn, y1..yn: integers, + - * / ^ and
// parentheses, so canonical output and human-written products both load.
RationalFunction parse_rational(const std::string& text, const VarTable& vt);

}  // namespace binres

#endif
