#pragma once

#include "prank/linalg.hpp"

namespace prank {

/// Square matrix together with a Frobenius twist: +1 for Frobenius-type
/// maps (T(cv) = c^p T(v)), -1 for Cartier-type (c^(1/p)).
/// Column convention: column j is the image of the j-th basis vector.
/// Application: entrywise p^twist power of the coordinates, then the
/// matrix.
struct SemilinearMap {
    Mat matrix;
    int twist = 1;

    int dim() const { return matrix.rows(); }
    const FieldCtx* ctx() const { return matrix.ctx(); }

    std::vector<Fq> apply(const std::vector<Fq>& v) const;
    std::vector<Fq> apply_iterate(std::vector<Fq> v, int t) const;
};

/// Matrix of the t-fold composite as a plain linear map:
/// A * A^[p^s] * A^[p^2s] * ... (s = twist sign).
Mat composite_matrix(const SemilinearMap& m, int t);

/// Rank of the dim-fold composite; the stationary iterate rank.
int stable_rank(const SemilinearMap& m);

/// dim - rank of one application (entrywise Frobenius is bijective, so
/// this equals the semilinear kernel dimension).
int kernel_dim(const SemilinearMap& m);

/// True iff one application is bijective.
bool is_ordinary(const SemilinearMap& m);

struct InvariantBundle {
    int dim = 0;
    int sigma = 0;
    int a_number = 0;
    bool ordinary = false;
    std::vector<Fq> composite_charpoly;  // ascending, of the dim-fold composite
};

InvariantBundle invariants(const SemilinearMap& m);

}  // namespace prank
