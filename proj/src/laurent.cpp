#include <binres/laurent.hpp>

#include <cassert>

namespace binres {

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Rat& c) {
    LaurentPolynomial p(nvars);
    if (c != 0) p.terms_.emplace(Exp(nvars, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exp& e, const Rat& c) {
    LaurentPolynomial p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int var, int32_t power) {
    assert(var >= 0 && var < nvars);
    Exp e(nvars, 0);
    e[var] = power;
    return monomial(e, 1);
}

bool LaurentPolynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exp(nvars_, 0);
}

void LaurentPolynomial::add_term(const Exp& e, const Rat& c) {
    assert(static_cast<int>(e.size()) == nvars_);
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat LaurentPolynomial::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r += o;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    r -= o;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    assert(nvars_ == o.nvars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    assert(nvars_ == o.nvars_);
    LaurentPolynomial r(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rat& c) const {
    LaurentPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exp& s) const {
    assert(static_cast<int>(s.size()) == nvars_);
    LaurentPolynomial r(nvars_);
    Exp e(nvars_);
    for (const auto& [ea, c] : terms_) {
        for (int k = 0; k < nvars_; ++k) e[k] = ea[k] + s[k];
        r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative(int var) const {
    assert(var >= 0 && var < nvars_);
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.terms_.emplace(d, c * e[var]);
    }
    return r;
}

const Exp& LaurentPolynomial::leading_exp() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rat& LaurentPolynomial::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

int32_t LaurentPolynomial::min_exponent(int var) const {
    int32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

int32_t LaurentPolynomial::max_exponent(int var) const {
    int32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

bool LaurentPolynomial::is_polynomial() const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        for (auto x : e)
            if (x < 0) return false;
    }
    return true;
}

bool LaurentPolynomial::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_) {
        (void)e;
        if (c.get_den() != 1) return false;
    }
    return true;
}

bool LaurentPolynomial::depends_on(int var) const {
    for (const auto& [e, c] : terms_) {
        (void)c;
        if (e[var] != 0) return true;
    }
    return false;
}

LaurentPolynomial LaurentPolynomial::filter(const std::function<bool(const Exp&)>& keep) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        if (keep(e)) r.terms_.emplace(e, c);
    return r;
}

}  // namespace binres
