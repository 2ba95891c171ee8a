#include <binres/intmatrix.hpp>

#include <algorithm>
#include <cassert>

namespace binres {

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return IntegerMatrix(0, 0);
    IntegerMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        assert(cols[c].size() == cols[0].size());
        for (int r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntegerMatrix(0, 0);
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r) {
        assert(rows[r].size() == rows[0].size());
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Int> IntegerMatrix::column(int c) const {
    std::vector<Int> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Int> IntegerMatrix::row(int r) const {
    std::vector<Int> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

IntegerMatrix IntegerMatrix::submatrix_columns(const std::vector<int>& cols) const {
    IntegerMatrix m(rows_, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int r = 0; r < rows_; ++r) m.at(r, static_cast<int>(j)) = at(r, cols[j]);
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    assert(cols_ == o.rows_);
    IntegerMatrix m(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
        }
    return m;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    std::vector<Int> out(rows_, 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

int IntegerMatrix::rank() const {
    IntegerMatrix m = *this;
    int rank = 0;
    for (int c = 0; c < m.cols_ && rank < m.rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows_; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int cc = 0; cc < m.cols_; ++cc) std::swap(m.at(rank, cc), m.at(pivot, cc));
        for (int r = rank + 1; r < m.rows_; ++r) {
            if (m.at(r, c) == 0) continue;
            Int a = m.at(rank, c), b = m.at(r, c);
            for (int cc = c; cc < m.cols_; ++cc)
                m.at(r, cc) = m.at(r, cc) * a - m.at(rank, cc) * b;
        }
        ++rank;
    }
    return rank;
}

Int IntegerMatrix::determinant() const {
    assert(rows_ == cols_);
    if (rows_ == 0) return 1;
    IntegerMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    const int n = rows_;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // Bareiss division is exact
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

IntegerMatrix lattice_kernel(const IntegerMatrix& mat) {
    // Column-style Hermite reduction of [M] while tracking column operations
    // in U; kernel basis = columns of U for which the reduced column is zero.
    const int rows = mat.rows(), cols = mat.cols();
    IntegerMatrix h = mat;
    IntegerMatrix u = IntegerMatrix::identity(cols);

    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < rows; ++r) std::swap(h.at(r, a), h.at(r, b));
        for (int r = 0; r < cols; ++r) std::swap(u.at(r, a), u.at(r, b));
    };
    auto col_addmul = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < rows; ++r) h.at(r, dst) += f * h.at(r, src);
        for (int r = 0; r < cols; ++r) u.at(r, dst) += f * u.at(r, src);
    };
    auto col_negate = [&](int c) {
        for (int r = 0; r < rows; ++r) h.at(r, c) = -h.at(r, c);
        for (int r = 0; r < cols; ++r) u.at(r, c) = -u.at(r, c);
    };

    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        // Euclidean reduction across columns lead..cols-1 on row r.
        while (true) {
            int nz = -1;
            Int best;
            for (int c = lead; c < cols; ++c) {
                if (h.at(r, c) == 0) continue;
                if (nz < 0 || abs(h.at(r, c)) < best) {
                    nz = c;
                    best = abs(h.at(r, c));
                }
            }
            if (nz < 0) break;  // row r is zero on the tail; next row
            col_swap(lead, nz);
            if (h.at(r, lead) < 0) col_negate(lead);
            bool reduced = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (h.at(r, c) == 0) continue;
                Int q = h.at(r, c) / h.at(r, lead);  // truncated division
                col_addmul(c, lead, -q);
                if (h.at(r, c) != 0) reduced = false;
            }
            if (reduced) {
                ++lead;
                break;
            }
        }
    }
    // Columns lead..cols-1 of h are zero; the matching columns of u span the kernel.
    std::vector<int> kernel_cols;
    for (int c = lead; c < cols; ++c) kernel_cols.push_back(c);
    return u.submatrix_columns(kernel_cols);
}

std::vector<Int> smith_invariants(IntegerMatrix m) {
    std::vector<Int> inv;
    int top = 0;
    const int rows = m.rows(), cols = m.cols();
    while (top < rows && top < cols) {
        // find a nonzero pivot of minimal absolute value
        int pr = -1, pc = -1;
        Int best;
        for (int r = top; r < rows; ++r)
            for (int c = top; c < cols; ++c) {
                if (m.at(r, c) == 0) continue;
                if (pr < 0 || abs(m.at(r, c)) < best) {
                    pr = r;
                    pc = c;
                    best = abs(m.at(r, c));
                }
            }
        if (pr < 0) break;
        for (int c = 0; c < cols; ++c) std::swap(m.at(top, c), m.at(pr, c));
        for (int r = 0; r < rows; ++r) std::swap(m.at(r, top), m.at(r, pc));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = top + 1; r < rows; ++r) {
                if (m.at(r, top) == 0) continue;
                Int q = m.at(r, top) / m.at(top, top);
                for (int c = 0; c < cols; ++c) m.at(r, c) -= q * m.at(top, c);
                if (m.at(r, top) != 0) {
                    for (int c = 0; c < cols; ++c) std::swap(m.at(top, c), m.at(r, c));
                    clean = false;
                }
            }
            for (int c = top + 1; c < cols; ++c) {
                if (m.at(top, c) == 0) continue;
                Int q = m.at(top, c) / m.at(top, top);
                for (int r = 0; r < rows; ++r) m.at(r, c) -= q * m.at(r, top);
                if (m.at(top, c) != 0) {
                    for (int r = 0; r < rows; ++r) std::swap(m.at(r, top), m.at(r, c));
                    clean = false;
                }
            }
        }
        ++top;
    }
    // Diagonal now; normalize divisibility chain.
    int k = std::min(rows, cols);
    std::vector<Int> d;
    for (int i = 0; i < k; ++i)
        if (m.at(i, i) != 0) d.push_back(abs(m.at(i, i)));
    for (size_t i = 0; i + 1 < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            Int g = gcd(d[i], d[j]);
            if (g == 0) continue;
            Int l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    std::sort(d.begin(), d.end());
    return d;
}

std::optional<std::vector<Int>> solve_in_lattice(const IntegerMatrix& m,
                                                 const std::vector<Int>& rhs) {
    assert(m.rows() == m.cols());
    assert(static_cast<int>(rhs.size()) == m.rows());
    Int det = m.determinant();
    if (det == 0) throw SingularMatrix();
    const int n = m.rows();
    std::vector<Int> x(n);
    for (int i = 0; i < n; ++i) {
        IntegerMatrix mi = m;
        for (int r = 0; r < n; ++r) mi.at(r, i) = rhs[r];
        Int di = mi.determinant();
        if (di % det != 0) return std::nullopt;
        x[i] = di / det;
    }
    return x;
}

std::optional<std::vector<Int>> solve_integer(const IntegerMatrix& m,
                                              const std::vector<Int>& rhs) {
    // Solve via the column Hermite form: M U = H with H column-reduced, then
    // forward-substitute H z = rhs and return U z.
    const int rows = m.rows(), cols = m.cols();
    assert(static_cast<int>(rhs.size()) == rows);
    IntegerMatrix h = m;
    IntegerMatrix u = IntegerMatrix::identity(cols);
    auto col_swap = [&](int a, int b) {
        for (int r = 0; r < rows; ++r) std::swap(h.at(r, a), h.at(r, b));
        for (int r = 0; r < cols; ++r) std::swap(u.at(r, a), u.at(r, b));
    };
    auto col_addmul = [&](int dst, int src, const Int& f) {
        if (f == 0) return;
        for (int r = 0; r < rows; ++r) h.at(r, dst) += f * h.at(r, src);
        for (int r = 0; r < cols; ++r) u.at(r, dst) += f * u.at(r, src);
    };
    auto col_negate = [&](int c) {
        for (int r = 0; r < rows; ++r) h.at(r, c) = -h.at(r, c);
        for (int r = 0; r < cols; ++r) u.at(r, c) = -u.at(r, c);
    };

    int lead = 0;
    std::vector<std::pair<int, int>> pivots;  // (row, col) of h
    for (int r = 0; r < rows && lead < cols; ++r) {
        while (true) {
            int nz = -1;
            Int best;
            for (int c = lead; c < cols; ++c) {
                if (h.at(r, c) == 0) continue;
                if (nz < 0 || abs(h.at(r, c)) < best) {
                    nz = c;
                    best = abs(h.at(r, c));
                }
            }
            if (nz < 0) break;
            col_swap(lead, nz);
            if (h.at(r, lead) < 0) col_negate(lead);
            bool reduced = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (h.at(r, c) == 0) continue;
                Int q = h.at(r, c) / h.at(r, lead);
                col_addmul(c, lead, -q);
                if (h.at(r, c) != 0) reduced = false;
            }
            if (reduced) {
                pivots.emplace_back(r, lead);
                ++lead;
                break;
            }
        }
    }
    // Forward substitution: h z = rhs with z supported on pivot columns.
    std::vector<Int> z(cols, 0);
    std::vector<Int> residual = rhs;
    for (auto [pr, pc] : pivots) {
        if (residual[pr] == 0) continue;
        if (residual[pr] % h.at(pr, pc) != 0) return std::nullopt;
        Int f = residual[pr] / h.at(pr, pc);
        z[pc] = f;
        for (int r = 0; r < rows; ++r) residual[r] -= f * h.at(r, pc);
    }
    for (int r = 0; r < rows; ++r)
        if (residual[r] != 0) return std::nullopt;
    return u.apply(z);
}

}  // namespace binres
