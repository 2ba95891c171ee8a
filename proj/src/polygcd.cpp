#include <binres/polygcd.hpp>

#include <algorithm>
#include <cassert>
#include <map>

namespace binres {

namespace {

int last_active_var(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.depends_on(v) || b.depends_on(v)) return v;
    return -1;
}

int32_t degree_in(const LaurentPolynomial& p, int v) { return p.max_exponent(v); }

// Univariate view: coefficients of powers of v, with v's exponent zeroed.
std::map<int32_t, LaurentPolynomial> by_degree(const LaurentPolynomial& p, int v) {
    std::map<int32_t, LaurentPolynomial> out;
    for (const auto& [e, c] : p.terms()) {
        Exp r = e;
        int32_t k = r[v];
        r[v] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, LaurentPolynomial(p.nvars())).first;
        it->second.add_term(r, c);
    }
    return out;
}

LaurentPolynomial leading_coeff_in(const LaurentPolynomial& p, int v) {
    int32_t d = degree_in(p, v);
    LaurentPolynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != d) continue;
        Exp r = e;
        r[v] = 0;
        out.add_term(r, c);
    }
    return out;
}

LaurentPolynomial strip_integer_content(const LaurentPolynomial& p, Int& content_out) {
    content_out = integer_content(p);
    if (content_out == 0) return p;
    Int c = content_out;
    if (p.leading_coeff() < 0) {
        c = -c;
        content_out = c;
    }
    LaurentPolynomial out(p.nvars());
    for (const auto& [e, a] : p.terms()) out.add_term(e, a / Rat(c));
    return out;
}

// Content of p with respect to variable v: gcd of the v-coefficients.
LaurentPolynomial content_wrt(const LaurentPolynomial& p, int v) {
    LaurentPolynomial g(p.nvars());
    for (const auto& [d, c] : by_degree(p, v)) {
        (void)d;
        g = poly_gcd(g, c);
        if (g.is_constant() && g.coeff(Exp(p.nvars(), 0)) == 1) break;
    }
    return g;
}

LaurentPolynomial primitive_wrt(const LaurentPolynomial& p, int v) {
    LaurentPolynomial c = content_wrt(p, v);
    if (c.is_constant() && c.coeff(Exp(p.nvars(), 0)) == 1) return p;
    auto q = divide_exact(p, c);
    assert(q.has_value());
    return *q;
}

// Naive pseudo-remainder of f by g with respect to v (deg_v f >= deg_v g > 0
// not required; returns f when deg_v f < deg_v g).
LaurentPolynomial prem(LaurentPolynomial f, const LaurentPolynomial& g, int v) {
    const int32_t dg = degree_in(g, v);
    const LaurentPolynomial lg = leading_coeff_in(g, v);
    while (!f.is_zero() && degree_in(f, v) >= dg) {
        const int32_t df = degree_in(f, v);
        LaurentPolynomial lf = leading_coeff_in(f, v);
        Exp shift(f.nvars(), 0);
        shift[v] = df - dg;
        f = f * lg - g * lf.shifted(shift);
        if (!f.is_zero() && degree_in(f, v) >= df && df >= dg) {
            // cancellation failed to reduce the degree; cannot happen
            assert(false);
            break;
        }
    }
    return f;
}

// gcd of primitive polynomials with no integer or monomial content.
LaurentPolynomial gcd_primitive(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    const int v = last_active_var(a, b);
    if (v < 0) return LaurentPolynomial::constant(a.nvars(), 1);

    LaurentPolynomial ca = content_wrt(a, v);
    LaurentPolynomial cb = content_wrt(b, v);
    LaurentPolynomial cg = poly_gcd(ca, cb);
    auto qa = divide_exact(a, ca);
    auto qb = divide_exact(b, cb);
    assert(qa && qb);
    LaurentPolynomial f = *qa, g = *qb;
    if (degree_in(f, v) < degree_in(g, v)) std::swap(f, g);

    while (true) {
        if (g.is_zero()) break;
        if (degree_in(g, v) == 0) {
            // v-free nonzero remainder: the primitive parts are coprime
            return cg;
        }
        LaurentPolynomial r = prem(f, g, v);
        f = g;
        if (r.is_zero()) {
            g = r;
            break;
        }
        Int ic;
        r = strip_integer_content(r, ic);
        g = primitive_wrt(r, v);
    }
    // f is the last nonzero primitive remainder
    Int ic;
    f = strip_integer_content(f, ic);
    f = primitive_wrt(f, v);
    return cg * f;
}

}  // namespace

Int integer_content(const LaurentPolynomial& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        (void)e;
        assert(c.get_den() == 1);
        g = gcd(g, c.get_num());
        if (g == 1) break;
    }
    return g;
}

Exp monomial_content(const LaurentPolynomial& p) {
    Exp m(p.nvars(), 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        if (first) {
            m = e;
            first = false;
        } else {
            for (int i = 0; i < p.nvars(); ++i) m[i] = std::min(m[i], e[i]);
        }
    }
    return m;
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& p,
                                              const LaurentPolynomial& q) {
    if (q.is_zero()) return std::nullopt;
    LaurentPolynomial rem = p;
    LaurentPolynomial quot(p.nvars());
    const Exp& lq = q.leading_exp();
    const Rat& cq = q.leading_coeff();
    while (!rem.is_zero()) {
        const Exp& lr = rem.leading_exp();
        Exp t(rem.nvars());
        for (int i = 0; i < rem.nvars(); ++i) {
            t[i] = lr[i] - lq[i];
            if (t[i] < 0) return std::nullopt;
        }
        Rat c = rem.leading_coeff() / cq;
        quot.add_term(t, c);
        rem -= q.shifted(t).scaled(c);
    }
    return quot;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return a;
    Int ca = 0, cb = 0;
    if (a.is_zero()) {
        LaurentPolynomial r = strip_integer_content(b, cb);
        Int c = abs(cb);
        return r.scaled(Rat(c));
    }
    if (b.is_zero()) {
        LaurentPolynomial r = strip_integer_content(a, ca);
        Int c = abs(ca);
        return r.scaled(Rat(c));
    }
    LaurentPolynomial pa = strip_integer_content(a, ca);
    LaurentPolynomial pb = strip_integer_content(b, cb);
    Int c = gcd(abs(ca), abs(cb));

    Exp ma = monomial_content(pa);
    Exp mb = monomial_content(pb);
    Exp gmon(a.nvars()), sa(a.nvars()), sb(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) {
        gmon[i] = std::min(ma[i], mb[i]);
        sa[i] = -ma[i];
        sb[i] = -mb[i];
    }
    pa = pa.shifted(sa);
    pb = pb.shifted(sb);

    LaurentPolynomial g(a.nvars());
    if (pa == pb) {
        g = pa;
    } else if (pa.is_monomial() || pb.is_monomial()) {
        // both stripped of monomial content, so only a constant survives
        g = LaurentPolynomial::constant(a.nvars(), 1);
    } else {
        g = gcd_primitive(pa, pb);
    }
    if (!g.is_zero() && g.leading_coeff() < 0) g = -g;
    return g.shifted(gmon).scaled(Rat(c));
}

}  // namespace binres
