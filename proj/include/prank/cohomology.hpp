#pragma once

#include <utility>
#include <vector>

#include "prank/poly.hpp"

namespace prank {

/// Bidegree: projective twists live in the first slot with second = 0;
/// Hirzebruch twists use both.
using Bideg = std::pair<long, long>;

struct Ambient {
    enum class Kind { Projective, Hirzebruch };
    Kind kind = Kind::Projective;
    int n = 2;  // projective dimension
    int r = 0;  // Hirzebruch parameter
    // weight of each variable under the Cox grading; overridable
    std::vector<Bideg> weights;

    static Ambient projective(int n);
    static Ambient hirzebruch(int r);

    int nvars() const { return kind == Kind::Projective ? n + 1 : 4; }
    Bideg weight(int var) const { return weights[static_cast<std::size_t>(var)]; }
    Bideg degree_of(const ExpVec& e) const;
};

/// Weighted degree of a polynomial; throws if not homogeneous.
Bideg homogeneous_degree(const MultiPoly& f, const Ambient& amb);

/// Ordered monomial basis of the top cohomology group H^top(O(-twist)).
/// A monomial alpha stands for the class prod x_i^(-alpha_i).
struct CohomologyBasis {
    Ambient ambient;
    Bideg twist{0, 0};
    const FieldCtx* ctx = nullptr;
    std::vector<ExpVec> monomials;  // graded-lex order, all entries >= 1
    std::unordered_map<ExpVec, int, ExpVecHash> index;

    int dim() const { return static_cast<int>(monomials.size()); }
    int find(const ExpVec& e) const {
        auto it = index.find(e);
        return it == index.end() ? -1 : it->second;
    }
};

struct ClassVector {
    const CohomologyBasis* basis = nullptr;
    std::vector<Fq> coords;

    static ClassVector zero(const CohomologyBasis& b);
    static ClassVector unit(const CohomologyBasis& b, int i);
    bool is_zero() const;
};

/// All alpha with alpha_i >= 1 summing to m, in n+1 variables.
/// dim = C(m-1, n); empty for m <= n.
CohomologyBasis basis_projective(int n, long m, const FieldCtx* ctx);

/// All alpha >= (1,1,1,1) with sum alpha_i beta_i = (a,b) under the
/// Hirzebruch grading. Optional weight override.
CohomologyBasis basis_hirzebruch(int r, long a, long b, const FieldCtx* ctx,
                                 const std::vector<Bideg>* weights = nullptr);

CohomologyBasis basis_for_twist(const Ambient& amb, Bideg twist, const FieldCtx* ctx);

/// Multiplication by f followed by Cech projection: a product term
/// survives only when every exponent stays <= -1.
/// Requires twist(target) = twist(source) - deg(f).
ClassVector mul_project(const ClassVector& v, const MultiPoly& f,
                        const CohomologyBasis& target);

/// Echelonized basis (RREF, pivots in basis order) of the intersection
/// of the kernels of mul_project(., f_i). Targets derive from the
/// ambient grading.
std::vector<ClassVector> kernel_intersection(const CohomologyBasis& source,
                                             const std::vector<MultiPoly>& polys);

}  // namespace prank
