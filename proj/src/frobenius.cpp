#include "prank/frobenius.hpp"

namespace prank {

namespace {

// entry (alpha', alpha) = coeff of p*alpha - alpha' in fp = f^(p-1)
Mat entry_matrix(const CohomologyBasis& basis, const MultiPoly& fp) {
    const FieldCtx* ctx = basis.ctx;
    const auto p = static_cast<std::int32_t>(ctx->p());
    Mat m(ctx, basis.dim(), basis.dim());
    for (int col = 0; col < basis.dim(); ++col) {
        const ExpVec scaled = basis.monomials[static_cast<std::size_t>(col)].scaled(p);
        for (const auto& [u, c] : fp.terms()) {
            ExpVec target = scaled - u;
            if (!target.all_ge(1)) continue;
            int row = basis.find(target);
            if (row >= 0) m.at(row, col) += c;
        }
    }
    return m;
}

}  // namespace

FrobeniusAction frobenius_plane(const MultiPoly& f) {
    if (f.is_zero()) throw spec_error("curve polynomial is zero");
    if (f.nvars() != 3) throw spec_error("plane curve needs 3 variables");
    Ambient amb = Ambient::projective(2);
    Bideg d = homogeneous_degree(f, amb);
    const FieldCtx* ctx = f.ctx();

    FrobeniusAction out;
    out.full_basis = basis_projective(2, d.first, ctx);
    MultiPoly fp = f.pow(static_cast<unsigned>(ctx->p() - 1));
    out.map = SemilinearMap{entry_matrix(out.full_basis, fp), +1};
    return out;
}

FrobeniusAction frobenius_ci(const std::vector<MultiPoly>& polys, int n) {
    if (polys.empty()) throw spec_error("complete intersection needs at least one equation");
    const FieldCtx* ctx = polys.front().ctx();
    Ambient amb = Ambient::projective(n);
    long total = 0;
    MultiPoly prod = MultiPoly::one(ctx, n + 1);
    for (const auto& f : polys) {
        if (f.nvars() != n + 1) throw spec_error("equation variable count != n+1");
        if (f.ctx() != ctx) throw spec_error("equations use different fields");
        total += homogeneous_degree(f, amb).first;
        prod = prod * f;
    }

    FrobeniusAction out;
    out.full_basis = basis_projective(n, total, ctx);
    const CohomologyBasis& B = out.full_basis;

    std::vector<ClassVector> kernel = kernel_intersection(B, polys);
    const int dim = static_cast<int>(kernel.size());

    // pivot column of each echelon kernel vector (its free coordinate)
    std::vector<int> pivot(static_cast<std::size_t>(dim), -1);
    std::vector<bool> is_pivot(static_cast<std::size_t>(B.dim()), false);
    for (int j = 0; j < dim; ++j) {
        const auto& kj = kernel[static_cast<std::size_t>(j)].coords;
        for (int c = 0; c < B.dim(); ++c)
            if (kj[static_cast<std::size_t>(c)].is_one() && !is_pivot[static_cast<std::size_t>(c)]) {
                // free coordinates carry a bare 1 and are unique per vector
                bool unit_elsewhere = false;
                for (int jj = 0; jj < dim; ++jj)
                    if (jj != j && !kernel[static_cast<std::size_t>(jj)]
                                        .coords[static_cast<std::size_t>(c)]
                                        .is_zero())
                        unit_elsewhere = true;
                if (!unit_elsewhere) {
                    pivot[static_cast<std::size_t>(j)] = c;
                    is_pivot[static_cast<std::size_t>(c)] = true;
                    break;
                }
            }
        if (pivot[static_cast<std::size_t>(j)] < 0)
            throw internal_error("kernel basis is not in echelon form");
    }

    MultiPoly fp = prod.pow(static_cast<unsigned>(ctx->p() - 1));
    Mat full = entry_matrix(B, fp);  // action on the ambient monomial basis

    Mat m(ctx, dim, dim);
    for (int j = 0; j < dim; ++j) {
        // image of kernel vector j: sum_alpha c_alpha^p * F(e_alpha)
        std::vector<Fq> img(static_cast<std::size_t>(B.dim()), fq_zero(ctx));
        const auto& kj = kernel[static_cast<std::size_t>(j)].coords;
        for (int a = 0; a < B.dim(); ++a) {
            Fq ca = kj[static_cast<std::size_t>(a)];
            if (ca.is_zero()) continue;
            Fq cap = ca.pow_p(1);
            for (int r = 0; r < B.dim(); ++r)
                if (!full.at(r, a).is_zero()) img[static_cast<std::size_t>(r)] += cap * full.at(r, a);
        }
        // expand in the echelon kernel basis via the free coordinates
        std::vector<Fq> coeffs(static_cast<std::size_t>(dim), fq_zero(ctx));
        for (int i = 0; i < dim; ++i)
            coeffs[static_cast<std::size_t>(i)] = img[static_cast<std::size_t>(pivot[static_cast<std::size_t>(i)])];
        // the residual must vanish identically
        for (int r = 0; r < B.dim(); ++r) {
            Fq resid = img[static_cast<std::size_t>(r)];
            for (int i = 0; i < dim; ++i)
                resid -= coeffs[static_cast<std::size_t>(i)] *
                         kernel[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(r)];
            if (!resid.is_zero())
                throw internal_error("Frobenius image escapes the kernel span");
        }
        for (int i = 0; i < dim; ++i) m.at(i, j) = coeffs[static_cast<std::size_t>(i)];
    }

    out.map = SemilinearMap{std::move(m), +1};
    for (auto& kv : kernel) out.kernel.push_back(std::move(kv.coords));
    return out;
}

FrobeniusAction frobenius_hirzebruch(int r, const MultiPoly& f,
                                     const std::vector<Bideg>* weights) {
    if (f.is_zero()) throw spec_error("curve polynomial is zero");
    if (f.nvars() != 4) throw spec_error("Hirzebruch curve needs 4 variables");
    Ambient amb = Ambient::hirzebruch(r);
    if (weights) amb.weights = *weights;
    Bideg d = homogeneous_degree(f, amb);
    if (d.first <= 0 || d.second <= 0)
        throw spec_error("Hirzebruch curve bidegree must be positive");
    const FieldCtx* ctx = f.ctx();

    FrobeniusAction out;
    out.full_basis = basis_hirzebruch(r, d.first, d.second, ctx, weights);
    MultiPoly fp = f.pow(static_cast<unsigned>(ctx->p() - 1));
    out.map = SemilinearMap{entry_matrix(out.full_basis, fp), +1};
    return out;
}

}  // namespace prank
