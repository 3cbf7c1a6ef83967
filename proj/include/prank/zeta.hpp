#pragma once

#include <cstdint>
#include <string>

#include "prank/cohomology.hpp"

namespace prank {

/// Geometric description of a curve for enumeration purposes: ambient
/// plus defining equations over the declared base field.
struct CurveGeometry {
    Ambient ambient;
    std::vector<MultiPoly> equations;
    const FieldCtx* ctx = nullptr;
};

struct ZetaData {
    std::uint64_t q = 0;
    long g = 0;
    std::vector<long long> counts;     // N_1 .. N_g
    std::vector<long long> numerator;  // P(t), ascending, degree 2g
};

/// Points rational over F_{q^ext}, q = p^k, by chart-wise enumeration.
/// Enforces the desk-scale budget ext*k*log2(p) <= 24.
long long count_points(const CurveGeometry& curve, int ext);

/// Weil zeta numerator from N_1..N_g via Newton's identities and the
/// functional equation. Throws on Weil-bound violations or non-integer
/// coefficients (both signal a counting bug or a singular curve).
std::vector<long long> zeta_numerator(const std::vector<long long>& counts,
                                      std::uint64_t q, long g);

/// Degree of P(t) mod p; the p-rank.
int p_rank_from_zeta(const std::vector<long long>& numerator, std::uint64_t p);

/// Convenience: counts N_1..N_g, reconstructs P, returns the bundle.
ZetaData zeta_data(const CurveGeometry& curve, long g);

/// Brute-force search for singular points rational over F_{q^m},
/// m <= max_ext. Returns human-readable descriptions of hits. An empty
/// result is a sanity signal, not a smoothness proof.
std::vector<std::string> probe_singular_points(const CurveGeometry& curve, int max_ext);

}  // namespace prank
