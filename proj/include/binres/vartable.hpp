#ifndef BINRES_VARTABLE_HPP
#define BINRES_VARTABLE_HPP

#include <binres/common.hpp>

#include <optional>
#include <string>
#include <vector>

namespace binres {

// Fixed, totally ordered variable set x_1 < ... < x_n < y_1 < ... < y_n for
// the coefficient ring, with a disjoint block t_1 < ... < t_d for the torus.
class VarTable {
public:
    VarTable(int n, int d) : n_(n), d_(d) {}

    int n() const { return n_; }
    int d() const { return d_; }
    int xy_count() const { return 2 * n_; }

    int x(int i) const { return i; }        // 0-based
    int y(int i) const { return n_ + i; }   // 0-based

    std::string xy_name(int var) const;     // x1..xn, y1..yn
    std::string t_name(int j) const;        // t1..td
    std::optional<int> xy_index(const std::string& name) const;

private:
    int n_, d_;
};

}  // namespace binres

#endif
