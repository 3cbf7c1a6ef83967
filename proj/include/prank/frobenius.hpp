#pragma once

#include "prank/cohomology.hpp"
#include "prank/semilinear.hpp"

namespace prank {

/// Frobenius action together with the basis it is expressed in.
/// For the complete-intersection path the basis is the echelonized
/// kernel inside the full monomial basis.
struct FrobeniusAction {
    SemilinearMap map;
    CohomologyBasis full_basis;
    std::vector<std::vector<Fq>> kernel;  // coordinates in full_basis; empty
                                          // when the action lives on the
                                          // full basis itself
};

/// Hasse-Witt matrix of a plane curve f = 0 of degree d on the monomial
/// basis of H^1(O): entry (alpha', alpha) = coeff of p*alpha - alpha'
/// in f^(p-1).
FrobeniusAction frobenius_plane(const MultiPoly& f);

/// Frobenius on the top cohomology of a complete intersection
/// f_1 = ... = f_r = 0 in P^n, restricted to the kernel intersection.
FrobeniusAction frobenius_ci(const std::vector<MultiPoly>& polys, int n);

/// Frobenius on H^2(H_r, O(-a,-b)) for a curve of bidegree (a,b).
FrobeniusAction frobenius_hirzebruch(int r, const MultiPoly& f,
                                     const std::vector<Bideg>* weights = nullptr);

}  // namespace prank
