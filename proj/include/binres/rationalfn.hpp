#ifndef BINRES_RATIONALFN_HPP
#define BINRES_RATIONALFN_HPP

#include <binres/laurent.hpp>
#include <binres/polygcd.hpp>

namespace binres {

// Canonical fraction of integer-coefficient polynomials:
//   * numerator and denominator have nonnegative exponents,
//   * no common polynomial or monomial factor,
//   * gcd(integer content of numerator, integer content of denominator) = 1,
//   * the graded-lex leading coefficient of the denominator is positive.
// Laurent inputs are cleared into the fraction, so the representative is
// unique and equality is termwise equality.
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(0) {}
    explicit RationalFunction(int nvars)
        : num_(LaurentPolynomial(nvars)), den_(LaurentPolynomial::constant(nvars, 1)) {}

    // rf_normalize: the unique canonical representative of num/den.
    static RationalFunction normalized(const LaurentPolynomial& num,
                                       const LaurentPolynomial& den);
    static RationalFunction from_polynomial(const LaurentPolynomial& p);
    static RationalFunction constant(int nvars, const Rat& c);

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction scaled(const Rat& c) const;
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    // rf_diff: exact quotient-rule derivative.
    RationalFunction derivative(int var) const;

private:
    LaurentPolynomial num_, den_;
};

}  // namespace binres

#endif
