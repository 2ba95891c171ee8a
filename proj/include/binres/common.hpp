#ifndef BINRES_COMMON_HPP
#define BINRES_COMMON_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binres {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};
struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "singular matrix") : Error(msg) {}
};
struct NonGenericWeight : Error {
    explicit NonGenericWeight(const std::string& msg = "weight vector is not generic") : Error(msg) {}
};
struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg = "basis is not unimodular") : Error(msg) {}
};
struct NotAnExponent : Error {
    explicit NotAnExponent(const std::string& msg = "vector does not have minimal negative support") : Error(msg) {}
};
struct TruncationExceeded : Error {
    explicit TruncationExceeded(const std::string& msg = "series truncation limit exceeded") : Error(msg) {}
};
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg = "internal verification failed") : Error(msg) {}
};
struct ReductionBudgetExceeded : Error {
    explicit ReductionBudgetExceeded(const std::string& msg = "Euler-Jacobi reduction budget exceeded") : Error(msg) {}
};
struct ColoopConfiguration : Error {
    explicit ColoopConfiguration(const std::string& msg = "configuration has a coloop") : Error(msg) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Sum of an integer vector, used for sign bookkeeping (-1)^{|v|}.
inline Int vec_sum(const std::vector<Int>& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
}

inline int parity_sign(const Int& k) { return mpz_odd_p(k.get_mpz_t()) ? -1 : 1; }

}  // namespace binres

#endif
