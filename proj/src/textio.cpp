#include <binres/textio.hpp>

#include <cassert>
#include <cctype>
#include <sstream>

namespace binres {

std::string VarTable::xy_name(int var) const {
    assert(var >= 0 && var < 2 * n_);
    std::ostringstream os;
    if (var < n_)
        os << 'x' << (var + 1);
    else
        os << 'y' << (var - n_ + 1);
    return os.str();
}

std::string VarTable::t_name(int j) const {
    std::ostringstream os;
    os << 't' << (j + 1);
    return os.str();
}

std::optional<int> VarTable::xy_index(const std::string& name) const {
    if (name.size() < 2) return std::nullopt;
    char b = name[0];
    if (b != 'x' && b != 'y') return std::nullopt;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    int idx = std::stoi(name.substr(1));
    if (idx < 1 || idx > n_) return std::nullopt;
    return b == 'x' ? x(idx - 1) : y(idx - 1);
}

std::string to_text(const LaurentPolynomial& p, const VarTable& vt) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending graded lex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Exp& e = it->first;
        Rat c = it->second;
        assert(c.get_den() == 1);
        Int num = c.get_num();
        if (first) {
            if (num < 0) os << '-';
        } else {
            os << (num < 0 ? " - " : " + ");
        }
        first = false;
        Int mag = abs(num);
        bool monomial_trivial = true;
        for (auto x : e)
            if (x != 0) monomial_trivial = false;
        bool printed = false;
        if (mag != 1 || monomial_trivial) {
            os << mag.get_str();
            printed = true;
        }
        for (size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (printed) os << '*';
            os << vt.xy_name(static_cast<int>(v));
            if (e[v] != 1) os << '^' << e[v];
            printed = true;
        }
    }
    return os.str();
}

std::string to_text(const RationalFunction& f, const VarTable& vt) {
    std::string num = to_text(f.numerator(), vt);
    const LaurentPolynomial& d = f.denominator();
    if (d.is_constant() && !d.is_zero() && d.leading_coeff() == 1) return num;
    return num + "/(" + to_text(d, vt) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const VarTable& vt;

    Parser(const std::string& text, const VarTable& table) : s(text), vt(table) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        std::ostringstream os;
        os << "parse error at offset " << pos << ": " << what;
        throw ParseError(os.str());
    }

    RationalFunction parse() {
        RationalFunction r = expression();
        if (!eof()) fail("trailing input");
        return r;
    }

    RationalFunction expression() {
        RationalFunction acc =
            accept('-') ? -term() : (accept('+'), term());
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + term();
            } else if (c == '-') {
                ++pos;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                acc = acc * power();
            } else if (c == '/') {
                ++pos;
                acc = acc / power();
            } else {
                return acc;
            }
        }
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (accept('^')) {
            bool neg = accept('-');
            long e = integer();
            RationalFunction r = RationalFunction::constant(vt.xy_count(), 1);
            for (long i = 0; i < e; ++i) r = r * base;
            if (neg) r = RationalFunction::constant(vt.xy_count(), 1) / r;
            return r;
        }
        return base;
    }

    RationalFunction atom() {
        char c = peek();
        if (c == '(') {
            ++pos;
            RationalFunction r = expression();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            Int v(s.substr(start, pos - start));
            return RationalFunction::constant(vt.xy_count(), Rat(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            ++pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string name = s.substr(start, pos - start);
            auto idx = vt.xy_index(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return RationalFunction::from_polynomial(
                LaurentPolynomial::variable(vt.xy_count(), *idx));
        }
        fail("unexpected character");
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }
};

}  // namespace

RationalFunction parse_rational(const std::string& text, const VarTable& vt) {
    Parser p(text, vt);
    return p.parse();
}

}  // namespace binres
