#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <binres/intmatrix.hpp>
#include <binres/polygcd.hpp>
#include <binres/rationalfn.hpp>
#include <binres/textio.hpp>

#include <random>

using namespace binres;

namespace {

const VarTable vt3(3, 1);

RationalFunction rf(const std::string& s) { return parse_rational(s, vt3); }

LaurentPolynomial poly(const std::string& s) {
    RationalFunction f = rf(s);
    REQUIRE(f.denominator().is_constant());
    return f.numerator().scaled(Rat(1) / f.denominator().leading_coeff());
}

std::mt19937 rng(20240901);

LaurentPolynomial random_poly(int nvars, int max_terms, int max_exp, int max_coeff) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    LaurentPolynomial p(nvars);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Exp e(nvars);
        for (int v = 0; v < nvars; ++v) e[v] = exp(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

RationalFunction random_rf(int nvars) {
    LaurentPolynomial d(nvars);
    while (d.is_zero()) d = random_poly(nvars, 3, 2, 3);
    return RationalFunction::normalized(random_poly(nvars, 3, 2, 3), d);
}

}  // namespace

TEST_CASE("rf_normalize canonicalization") {
    CHECK(rf("(x1*y2 - x2*y1)/(y2*x1 - y1*x2)") == rf("1"));
    CHECK(rf("x1^2*y1/(x1*y1^2)") == rf("x1/y1"));

    RationalFunction f = rf("2*x1/(4*y1)");
    CHECK(to_text(f, vt3) == "x1/(2*y1)");
    CHECK(f.numerator() == poly("x1"));
    CHECK(f.denominator() == poly("2*y1"));

    // idempotence
    RationalFunction g = RationalFunction::normalized(f.numerator(), f.denominator());
    CHECK(g == f);

    CHECK_THROWS_AS(rf("x1/0"), DivisionByZero);
}

TEST_CASE("rf_normalize clears Laurent exponents") {
    // x1^-1 / (x1^-2 y1) = x1 / y1
    LaurentPolynomial num(6), den(6);
    num.add_term(Exp{-1, 0, 0, 0, 0, 0}, 1);
    den.add_term(Exp{-2, 0, 0, 1, 0, 0}, 1);
    CHECK(RationalFunction::normalized(num, den) == rf("x1/y1"));
}

TEST_CASE("rf_arith examples") {
    CHECK((rf("x1/y1") + rf("-x1/y1")).is_zero());
    CHECK(rf("1/(y1*y2*y3)") * rf("y1*y2*y3") == rf("1"));
    CHECK(rf("x1/(x1+y1)") + rf("y1/(x1+y1)") == rf("1"));
    CHECK_THROWS_AS(rf("x1") / RationalFunction(6), DivisionByZero);
}

TEST_CASE("rf_diff examples") {
    CHECK(rf("1/(y1*y2*y3)").derivative(vt3.x(0)).is_zero());
    CHECK(rf("1/y1").derivative(vt3.y(0)) == rf("-1/y1^2"));
    CHECK(rf("x1^3").derivative(vt3.x(0)) == rf("3*x1^2"));
}

TEST_CASE("field properties on random instances") {
    for (int iter = 0; iter < 40; ++iter) {
        RationalFunction f = random_rf(6), g = random_rf(6);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f + g) - g == f);
        if (!f.is_zero()) {
            CHECK(f * (RationalFunction::constant(6, 1) / f) ==
                  RationalFunction::constant(6, 1));
        }
        // canonical closure: re-normalizing an arithmetic result is a no-op
        RationalFunction h = f * g + f;
        CHECK(RationalFunction::normalized(h.numerator(), h.denominator()) == h);
    }
}

TEST_CASE("Leibniz rule on random products") {
    for (int iter = 0; iter < 25; ++iter) {
        RationalFunction f = random_rf(6), g = random_rf(6);
        for (int var : {0, 3}) {
            CHECK((f * g).derivative(var) ==
                  f.derivative(var) * g + f * g.derivative(var));
        }
    }
}

TEST_CASE("poly_gcd fundamentals") {
    CHECK(poly_gcd(poly("x1^2 - y1^2"), poly("x1 + y1")) == poly("x1 + y1"));
    CHECK(poly_gcd(poly("2*x1*y1"), poly("4*y1^2")) == poly("2*y1"));
    CHECK(poly_gcd(poly("x1 + y1"), poly("x1 + y2")) == poly("1"));
    for (int iter = 0; iter < 25; ++iter) {
        LaurentPolynomial a = random_poly(4, 3, 2, 3);
        LaurentPolynomial b = random_poly(4, 3, 2, 3);
        LaurentPolynomial c = random_poly(4, 2, 2, 3);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        LaurentPolynomial g = poly_gcd(a * c, b * c);
        // c divides gcd(ac, bc)
        CHECK(divide_exact(g, poly_gcd(c, c)).has_value());
        CHECK(divide_exact(a * c, g).has_value());
        CHECK(divide_exact(b * c, g).has_value());
    }
}

TEST_CASE("lattice_kernel examples and saturation") {
    SUBCASE("all-ones row") {
        IntegerMatrix m = IntegerMatrix::from_rows({{1, 1, 1}});
        IntegerMatrix k = lattice_kernel(m);
        CHECK(k.cols() == 2);
        CHECK((m * k).is_zero());
        auto inv = smith_invariants(k);
        REQUIRE(inv.size() == 2);
        CHECK(inv[0] == 1);
        CHECK(inv[1] == 1);
        // lattice equality with {(1,-1,0),(0,1,-1)}
        CHECK(solve_integer(k, {1, -1, 0}).has_value());
        CHECK(solve_integer(k, {0, 1, -1}).has_value());
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(lattice_kernel(IntegerMatrix::identity(2)).cols() == 0);
    }
    SUBCASE("twisted cubic matrix") {
        IntegerMatrix m = IntegerMatrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
        IntegerMatrix k = lattice_kernel(m);
        CHECK(k.cols() == 2);
        CHECK((m * k).is_zero());
        CHECK(solve_integer(k, {1, -2, 1, 0}).has_value());
        CHECK(solve_integer(k, {0, 1, -2, 1}).has_value());
        auto inv = smith_invariants(k);
        for (const auto& d : inv) CHECK(d == 1);
    }
    SUBCASE("random kernels satisfy M*K = 0 and are saturated") {
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int iter = 0; iter < 20; ++iter) {
            IntegerMatrix m(2, 5);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 5; ++c) m.at(r, c) = entry(rng);
            IntegerMatrix k = lattice_kernel(m);
            CHECK((m * k).is_zero());
            CHECK(k.cols() == 5 - m.rank());
            for (const auto& d : smith_invariants(k)) CHECK(d == 1);
        }
    }
}

TEST_CASE("solve_in_lattice") {
    IntegerMatrix two(1, 1);
    two.at(0, 0) = 2;
    CHECK(!solve_in_lattice(two, {3}).has_value());
    auto s = solve_in_lattice(two, {4});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 2);

    IntegerMatrix m = IntegerMatrix::from_rows({{1, 1}, {0, 1}});
    auto v = solve_in_lattice(m, {1, 1});
    REQUIRE(v.has_value());
    CHECK((*v)[0] == 0);
    CHECK((*v)[1] == 1);

    IntegerMatrix sing = IntegerMatrix::from_rows({{1, 1}, {2, 2}});
    CHECK_THROWS_AS(solve_in_lattice(sing, {1, 1}), SingularMatrix);

    std::uniform_int_distribution<int> entry(-4, 4);
    for (int iter = 0; iter < 30; ++iter) {
        IntegerMatrix a(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a.at(r, c) = entry(rng);
        if (a.determinant() == 0) continue;
        std::vector<Int> nu = {entry(rng), entry(rng), entry(rng)};
        auto back = solve_in_lattice(a, a.apply(nu));
        REQUIRE(back.has_value());
        CHECK(*back == nu);
    }
}

TEST_CASE("determinant and rank") {
    IntegerMatrix m = IntegerMatrix::from_rows({{1, 1}, {1, 3}});
    CHECK(m.determinant() == 2);
    CHECK(m.rank() == 2);
    IntegerMatrix z = IntegerMatrix::from_rows({{1, 2}, {2, 4}});
    CHECK(z.determinant() == 0);
    CHECK(z.rank() == 1);
    // determinant sign under column order
    IntegerMatrix s = IntegerMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(s.determinant() == -1);
}

TEST_CASE("canonical text round-trips") {
    for (int iter = 0; iter < 30; ++iter) {
        RationalFunction f = random_rf(6);
        std::string s = to_text(f, vt3);
        CHECK(parse_rational(s, vt3) == f);
    }
    CHECK(to_text(rf("1/(y1*y2*y3)"), vt3) == "1/(y1*y2*y3)");
    CHECK(to_text(rf("0"), vt3) == "0");
    CHECK(to_text(rf("-x1 - 1"), vt3) == "-x1 - 1");
}
