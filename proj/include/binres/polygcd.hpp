#ifndef BINRES_POLYGCD_HPP
#define BINRES_POLYGCD_HPP

#include <binres/laurent.hpp>

#include <optional>

namespace binres {

// Exact arithmetic on polynomials with integer coefficients (nonnegative
// exponents). Callers clear rational content first.

// gcd of all coefficients; 0 for the zero polynomial.
Int integer_content(const LaurentPolynomial& p);

// Componentwise minimum of all exponent vectors (the monomial content).
Exp monomial_content(const LaurentPolynomial& p);

// Exact quotient p / q, or nullopt if q does not divide p.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p,
                                              const LaurentPolynomial& q);

// gcd of integer polynomials via content / primitive-part recursion on the
// last active variable with a primitive pseudo-remainder sequence. The result
// is primitive with positive leading coefficient (graded lex); gcd(0,0) = 0.
LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace binres

#endif
