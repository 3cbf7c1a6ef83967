#pragma once

#include "prank/frobenius.hpp"

namespace prank {

/// Monomial basis x^i y^j (i + j <= d - 3) of the regular/dualizing
/// differentials h dx/f_y of a degree-d plane curve in an affine chart.
struct DifferentialBasis {
    long d = 0;
    int dehomog_var = 2;   // variable set to 1
    int derivative_var = 1;  // variable whose partial appears in the form
    std::vector<std::pair<int, int>> monomials;  // (i, j) in chart coordinates
    const FieldCtx* ctx = nullptr;

    int dim() const { return static_cast<int>(monomials.size()); }
};

struct CartierAction {
    SemilinearMap map;  // twist -1
    DifferentialBasis basis;
};

/// Cartier operator matrix by coefficient extraction from
/// f_chart^(p-1) * h: the image coordinate at x^u y^v is the p-th root
/// of the coefficient of x^(pu+p-1) y^(pv+p-1).
/// Chart fallback: (z=1, f_y) -> (z=1, f_x) -> (y=1) -> (x=1).
CartierAction cartier_plane(const MultiPoly& f);

struct DualityReport {
    int dim = 0;
    int rank_frobenius = 0;
    int rank_cartier = 0;
    int kernel_frobenius = 0;
    int kernel_cartier = 0;
    bool pass = false;
};

/// Checks that Frobenius on H^1(O) and Cartier on H^0(Omega) have equal
/// kernel dimensions and equal stable ranks.
DualityReport duality_check(const MultiPoly& f);

}  // namespace prank
