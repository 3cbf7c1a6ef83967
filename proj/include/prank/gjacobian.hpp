#pragma once

#include <vector>

#include "prank/field.hpp"

namespace prank {

/// Declared singularity of a plane curve. Only the two kinds whose
/// numerical effect on the generalized Jacobian is pinned down are
/// supported.
struct SingularityDecl {
    enum class Kind { OrdinaryMultiple, CuspZ2Xr };
    Kind kind;
    int param;  // multiplicity m >= 2, or odd cusp exponent r >= 3

    long delta() const;     // local genus drop
    int branches() const;   // analytic branches through the point

    static SingularityDecl ordinary(int m);
    static SingularityDecl cusp(int r);
};

struct CorrectionReport {
    long p_a = 0;
    long g = 0;
    long dim_G = 0;         // total delta
    long toric_rank = 0;    // sum of (branches - 1)
    long unipotent_dim = 0;
    long sigma_X = 0;
    long a_X_lower = 0;     // lower bound only (exact a needs a smooth model)
    bool ordinary = false;  // sigma_X == g
};

/// Corrects (sigma, a) of the generalized Jacobian to the smooth model:
/// sigma(X) = sigma(X') - toric rank, a(X) >= a(X') - unipotent dim.
CorrectionReport correct_invariants(long p_a, long sigma_Xp, long a_Xp,
                                    const std::vector<SingularityDecl>& sings);

/// Geometric genus of a degree-d plane curve with the declared
/// singularities: (d-1)(d-2)/2 - sum delta.
long genus_plane(long d, const std::vector<SingularityDecl>& sings);

}  // namespace prank
