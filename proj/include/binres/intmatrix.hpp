#ifndef BINRES_INTMATRIX_HPP
#define BINRES_INTMATRIX_HPP

#include <binres/common.hpp>

#include <optional>
#include <vector>

namespace binres {

// Dense matrix over Z with arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}
    static IntegerMatrix identity(int n);
    static IntegerMatrix from_columns(const std::vector<std::vector<Int>>& cols);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    std::vector<Int> column(int c) const;
    std::vector<Int> row(int r) const;
    IntegerMatrix submatrix_columns(const std::vector<int>& cols) const;
    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // this * v
    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool is_zero() const;

    int rank() const;                     // rank over Q (fraction-free elimination)
    Int determinant() const;              // Bareiss; square matrices only

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

// Columns form a Z-basis of ker_Z(M), computed by column Hermite reduction.
// The basis is saturated: every integer kernel vector is an integer
// combination of the columns.
IntegerMatrix lattice_kernel(const IntegerMatrix& m);

// Invariant factors d_1 | d_2 | ... of the Smith normal form (nonnegative,
// zeros excluded).
std::vector<Int> smith_invariants(IntegerMatrix m);

// Solves m * x = rhs over Z for square nonsingular m; nullopt when the
// rational solution is not integral. Throws SingularMatrix when det = 0.
std::optional<std::vector<Int>> solve_in_lattice(const IntegerMatrix& m,
                                                 const std::vector<Int>& rhs);

// Any integer solution of m * x = rhs, or nullopt (m need not be square).
std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& m,
                                              const std::vector<Int>& rhs);

}  // namespace binres

#endif
