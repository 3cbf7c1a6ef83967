#include "prank/gjacobian.hpp"

namespace prank {

long SingularityDecl::delta() const {
    if (kind == Kind::OrdinaryMultiple) return static_cast<long>(param) * (param - 1) / 2;
    return (param - 1) / 2;
}

int SingularityDecl::branches() const {
    return kind == Kind::OrdinaryMultiple ? param : 1;
}

SingularityDecl SingularityDecl::ordinary(int m) {
    if (m < 2) throw spec_error("ordinary multiple point needs multiplicity >= 2");
    return {Kind::OrdinaryMultiple, m};
}

SingularityDecl SingularityDecl::cusp(int r) {
    if (r < 3 || r % 2 == 0) throw spec_error("cusp z^2 = x^r needs odd r >= 3");
    return {Kind::CuspZ2Xr, r};
}

CorrectionReport correct_invariants(long p_a, long sigma_Xp, long a_Xp,
                                    const std::vector<SingularityDecl>& sings) {
    CorrectionReport r;
    r.p_a = p_a;
    for (const auto& s : sings) {
        r.dim_G += s.delta();
        r.toric_rank += s.branches() - 1;
    }
    r.unipotent_dim = r.dim_G - r.toric_rank;
    if (r.dim_G > p_a) throw spec_error("total delta-invariant exceeds the arithmetic genus");
    if (sigma_Xp < r.toric_rank)
        throw spec_error("sigma(X') below the toric rank; inconsistent input");
    r.g = p_a - r.dim_G;
    r.sigma_X = sigma_Xp - r.toric_rank;
    r.a_X_lower = std::max(0L, a_Xp - r.unipotent_dim);
    if (r.sigma_X > r.g)
        throw spec_error("corrected sigma exceeds the geometric genus; inconsistent input");
    r.ordinary = r.sigma_X == r.g;
    return r;
}

long genus_plane(long d, const std::vector<SingularityDecl>& sings) {
    if (d < 1) throw spec_error("curve degree must be >= 1");
    long g = (d - 1) * (d - 2) / 2;
    for (const auto& s : sings) g -= s.delta();
    if (g < 0) throw spec_error("declared singularities exceed the arithmetic genus");
    return g;
}

}  // namespace prank
