#ifndef BINRES_LAURENT_HPP
#define BINRES_LAURENT_HPP

#include <binres/common.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace binres {

using Exp = std::vector<int32_t>;

// Graded lexicographic order: total degree first, then lex with the earliest
// variable most significant. Variable order is the index order of the table
// (x-block before y-block).
struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int64_t da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse Laurent polynomial over Q: exponents may be negative, zero
// coefficients are never stored.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exp, Rat, GradedLexLess>;

    explicit LaurentPolynomial(int nvars = 0) : nvars_(nvars) {}

    static LaurentPolynomial constant(int nvars, const Rat& c);
    static LaurentPolynomial monomial(const Exp& e, const Rat& c);
    static LaurentPolynomial variable(int nvars, int var, int32_t power = 1);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    // Accumulates c * x^e, erasing the term if the sum cancels.
    void add_term(const Exp& e, const Rat& c);
    Rat coeff(const Exp& e) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    bool operator==(const LaurentPolynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    LaurentPolynomial scaled(const Rat& c) const;
    LaurentPolynomial shifted(const Exp& s) const;  // multiply by x^s
    LaurentPolynomial derivative(int var) const;    // formal d/dx_var, Laurent

    // Leading term in graded lex (largest); polynomial must be nonzero.
    const Exp& leading_exp() const;
    const Rat& leading_coeff() const;

    int32_t min_exponent(int var) const;  // 0 for the zero polynomial
    int32_t max_exponent(int var) const;
    bool is_polynomial() const;           // no negative exponents
    bool has_integer_coeffs() const;
    bool depends_on(int var) const;

    // Restriction to terms selected by a predicate on the exponent vector.
    LaurentPolynomial filter(const std::function<bool(const Exp&)>& keep) const;

private:
    int nvars_;
    TermMap terms_;
};

}  // namespace binres

#endif
