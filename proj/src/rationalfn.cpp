#include <binres/rationalfn.hpp>

#include <algorithm>
#include <cassert>

namespace binres {

namespace {

// Least common multiple of the coefficient denominators.
Int denominator_lcm(const LaurentPolynomial& p) {
    Int l = 1;
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        l = lcm(l, Int(c.get_den()));
    }
    return l;
}

}  // namespace

RationalFunction RationalFunction::normalized(const LaurentPolynomial& num,
                                              const LaurentPolynomial& den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const int nv = num.nvars();
    assert(nv == den.nvars());
    RationalFunction out(nv);
    if (num.is_zero()) return out;

    // Clear Laurent exponents: multiply both sides into the polynomial ring,
    // then cancel the common monomial part.
    LaurentPolynomial n = num, d = den;
    Exp mn = monomial_content(n), md = monomial_content(d);
    Exp shift(nv);
    for (int v = 0; v < nv; ++v) shift[v] = -std::min(mn[v], md[v]);
    n = n.shifted(shift);
    d = d.shifted(shift);

    // Clear rational coefficients.
    Int l = lcm(denominator_lcm(n), denominator_lcm(d));
    if (l != 1) {
        n = n.scaled(Rat(l));
        d = d.scaled(Rat(l));
    }

    // Split integer contents, keep them coprime across the fraction.
    Int cn = integer_content(n), cd = integer_content(d);
    LaurentPolynomial pn = n.scaled(Rat(Int(1), cn));
    LaurentPolynomial pd = d.scaled(Rat(Int(1), cd));
    Int g = gcd(cn, cd);
    cn /= g;
    cd /= g;

    LaurentPolynomial pg = poly_gcd(pn, pd);
    if (!pg.is_constant() || pg.leading_coeff() != 1) {
        auto qn = divide_exact(pn, pg);
        auto qd = divide_exact(pd, pg);
        assert(qn && qd);
        pn = *qn;
        pd = *qd;
    }

    pn = pn.scaled(Rat(cn));
    pd = pd.scaled(Rat(cd));
    if (pd.leading_coeff() < 0) {
        pn = -pn;
        pd = -pd;
    }
    out.num_ = pn;
    out.den_ = pd;
    return out;
}

RationalFunction RationalFunction::from_polynomial(const LaurentPolynomial& p) {
    return normalized(p, LaurentPolynomial::constant(p.nvars(), 1));
}

RationalFunction RationalFunction::constant(int nvars, const Rat& c) {
    return normalized(LaurentPolynomial::constant(nvars, c),
                      LaurentPolynomial::constant(nvars, 1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // Common-denominator sum through gcd(d1, d2) to keep intermediates small.
    LaurentPolynomial g = poly_gcd(den_, o.den_);
    LaurentPolynomial d1 = den_, d2 = o.den_;
    if (!g.is_constant() || g.leading_coeff() != 1) {
        d1 = *divide_exact(den_, g);
        d2 = *divide_exact(o.den_, g);
    }
    return normalized(num_ * d2 + o.num_ * d1, den_ * d2);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction(nvars());
    return normalized(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by the zero rational function");
    return normalized(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::scaled(const Rat& c) const {
    if (c == 0) return RationalFunction(nvars());
    return normalized(num_.scaled(c), den_);
}

RationalFunction RationalFunction::derivative(int var) const {
    if (is_zero()) return *this;
    LaurentPolynomial dn = num_.derivative(var);
    LaurentPolynomial dd = den_.derivative(var);
    if (dd.is_zero()) return normalized(dn, den_);
    return normalized(dn * den_ - num_ * dd, den_ * den_);
}

}  // namespace binres
