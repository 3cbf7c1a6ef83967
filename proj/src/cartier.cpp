#include "prank/cartier.hpp"

namespace prank {

namespace {

struct Chart {
    int dehomog;
    int deriv;  // original variable index whose partial must survive
};

// chart-local index of an original variable after dropping `dehomog`
int local_index(int var, int dehomog) { return var < dehomog ? var : var - 1; }

}  // namespace

CartierAction cartier_plane(const MultiPoly& f) {
    if (f.is_zero()) throw spec_error("curve polynomial is zero");
    if (f.nvars() != 3) throw spec_error("plane curve needs 3 variables");
    Ambient amb = Ambient::projective(2);
    const long d = homogeneous_degree(f, amb).first;
    const FieldCtx* ctx = f.ctx();
    const auto p = static_cast<std::int32_t>(ctx->p());

    static constexpr Chart kCharts[] = {{2, 1}, {2, 0}, {1, 2}, {1, 0}, {0, 2}, {0, 1}};
    const Chart* chart = nullptr;
    MultiPoly fc;
    for (const Chart& c : kCharts) {
        MultiPoly cand = f.dehomogenize(c.dehomog);
        if (!cand.derivative(local_index(c.deriv, c.dehomog)).is_zero()) {
            chart = &c;
            fc = std::move(cand);
            break;
        }
    }
    if (!chart)
        throw spec_error("all affine charts are degenerate (every partial vanishes)");

    CartierAction out;
    out.basis.d = d;
    out.basis.ctx = ctx;
    out.basis.dehomog_var = chart->dehomog;
    out.basis.derivative_var = chart->deriv;
    for (int i = 0; i + 3 <= d; ++i)
        for (int j = 0; i + j + 3 <= d; ++j) out.basis.monomials.emplace_back(i, j);

    const int dim = out.basis.dim();
    MultiPoly fp = fc.pow(static_cast<unsigned>(ctx->p() - 1));

    Mat m(ctx, dim, dim);
    for (int col = 0; col < dim; ++col) {
        auto [i, j] = out.basis.monomials[static_cast<std::size_t>(col)];
        for (int row = 0; row < dim; ++row) {
            auto [u, v] = out.basis.monomials[static_cast<std::size_t>(row)];
            ExpVec e = ExpVec::zeros(2);
            e[0] = p * u + p - 1 - i;
            e[1] = p * v + p - 1 - j;
            if (e[0] < 0 || e[1] < 0) continue;
            Fq c = fp.coeff(e);
            if (!c.is_zero()) m.at(row, col) = c.pow_p(-1);
        }
    }
    out.map = SemilinearMap{std::move(m), -1};
    return out;
}

DualityReport duality_check(const MultiPoly& f) {
    FrobeniusAction fr = frobenius_plane(f);
    CartierAction ca = cartier_plane(f);
    DualityReport r;
    r.dim = fr.map.dim();
    r.rank_frobenius = stable_rank(fr.map);
    r.rank_cartier = stable_rank(ca.map);
    r.kernel_frobenius = kernel_dim(fr.map);
    r.kernel_cartier = kernel_dim(ca.map);
    r.pass = r.rank_frobenius == r.rank_cartier && r.kernel_frobenius == r.kernel_cartier;
    return r;
}

}  // namespace prank
