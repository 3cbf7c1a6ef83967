#include "prank/cohomology.hpp"

#include <algorithm>

#include "prank/linalg.hpp"

namespace prank {

Ambient Ambient::projective(int n) {
    if (n < 2) throw spec_error("projective ambient needs n >= 2");
    Ambient a;
    a.kind = Kind::Projective;
    a.n = n;
    a.weights.assign(static_cast<std::size_t>(n) + 1, Bideg{1, 0});
    return a;
}

Ambient Ambient::hirzebruch(int r) {
    if (r < 0) throw spec_error("Hirzebruch parameter r must be >= 0");
    Ambient a;
    a.kind = Kind::Hirzebruch;
    a.r = r;
    a.weights = {{1, 0}, {-r, 1}, {1, 0}, {0, 1}};
    return a;
}

Bideg Ambient::degree_of(const ExpVec& e) const {
    Bideg d{0, 0};
    for (int i = 0; i < e.size(); ++i) {
        d.first += static_cast<long>(e[i]) * weights[static_cast<std::size_t>(i)].first;
        d.second += static_cast<long>(e[i]) * weights[static_cast<std::size_t>(i)].second;
    }
    return d;
}

Bideg homogeneous_degree(const MultiPoly& f, const Ambient& amb) {
    if (f.is_zero()) throw spec_error("zero polynomial has no degree");
    bool first = true;
    Bideg d{0, 0};
    for (const auto& [e, c] : f.terms()) {
        Bideg t = amb.degree_of(e);
        if (first) {
            d = t;
            first = false;
        } else if (t != d) {
            throw spec_error("polynomial is not homogeneous under the ambient grading");
        }
    }
    return d;
}

ClassVector ClassVector::zero(const CohomologyBasis& b) {
    ClassVector v;
    v.basis = &b;
    v.coords.assign(static_cast<std::size_t>(b.dim()), fq_zero(b.ctx));
    return v;
}

ClassVector ClassVector::unit(const CohomologyBasis& b, int i) {
    ClassVector v = zero(b);
    v.coords[static_cast<std::size_t>(i)] = fq_one(b.ctx);
    return v;
}

bool ClassVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Fq& c) { return c.is_zero(); });
}

namespace {

CohomologyBasis finalize(CohomologyBasis b) {
    std::sort(b.monomials.begin(), b.monomials.end());
    for (std::size_t i = 0; i < b.monomials.size(); ++i)
        b.index.emplace(b.monomials[i], static_cast<int>(i));
    return b;
}

void enumerate_compositions(int nvars, long m, ExpVec& cur, int pos,
                            std::vector<ExpVec>& out) {
    if (pos == nvars - 1) {
        if (m >= 1) {
            cur[pos] = static_cast<std::int32_t>(m);
            out.push_back(cur);
        }
        return;
    }
    for (long v = 1; v <= m - (nvars - 1 - pos); ++v) {
        cur[pos] = static_cast<std::int32_t>(v);
        enumerate_compositions(nvars, m - v, cur, pos + 1, out);
    }
}

}  // namespace

CohomologyBasis basis_projective(int n, long m, const FieldCtx* ctx) {
    CohomologyBasis b;
    b.ambient = Ambient::projective(n);
    b.twist = {m, 0};
    b.ctx = ctx;
    if (m > n) {
        ExpVec cur = ExpVec::zeros(n + 1);
        enumerate_compositions(n + 1, m, cur, 0, b.monomials);
    }
    return finalize(std::move(b));
}

CohomologyBasis basis_hirzebruch(int r, long a, long b_twist, const FieldCtx* ctx,
                                 const std::vector<Bideg>* weights) {
    CohomologyBasis b;
    b.ambient = Ambient::hirzebruch(r);
    if (weights) {
        if (weights->size() != 4) throw spec_error("beta_vectors override needs 4 weight pairs");
        b.ambient.weights = *weights;
    }
    b.twist = {a, b_twist};
    b.ctx = ctx;
    const long bound = std::max(a + static_cast<long>(r) * b_twist, b_twist);
    ExpVec cur = ExpVec::zeros(4);
    for (long a1 = 1; a1 <= bound; ++a1)
        for (long a2 = 1; a2 <= bound; ++a2)
            for (long a3 = 1; a3 <= bound; ++a3)
                for (long a4 = 1; a4 <= bound; ++a4) {
                    cur[0] = static_cast<std::int32_t>(a1);
                    cur[1] = static_cast<std::int32_t>(a2);
                    cur[2] = static_cast<std::int32_t>(a3);
                    cur[3] = static_cast<std::int32_t>(a4);
                    if (b.ambient.degree_of(cur) == Bideg{a, b_twist})
                        b.monomials.push_back(cur);
                }
    return finalize(std::move(b));
}

CohomologyBasis basis_for_twist(const Ambient& amb, Bideg twist, const FieldCtx* ctx) {
    if (amb.kind == Ambient::Kind::Projective) {
        if (twist.second != 0) throw internal_error("projective twist with bidegree");
        return basis_projective(amb.n, twist.first, ctx);
    }
    return basis_hirzebruch(amb.r, twist.first, twist.second, ctx, &amb.weights);
}

ClassVector mul_project(const ClassVector& v, const MultiPoly& f,
                        const CohomologyBasis& target) {
    const CohomologyBasis& src = *v.basis;
    if (!f.is_zero()) {
        Bideg d = homogeneous_degree(f, src.ambient);
        Bideg expect{src.twist.first - d.first, src.twist.second - d.second};
        if (expect != target.twist)
            throw spec_error("mul_project grading mismatch: target twist != source twist - deg f");
    }
    ClassVector out = ClassVector::zero(target);
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        const Fq& ci = v.coords[i];
        if (ci.is_zero()) continue;
        const ExpVec& alpha = src.monomials[i];
        for (const auto& [u, c] : f.terms()) {
            ExpVec tgt = alpha - u;  // class monomial -(u - alpha)
            if (!tgt.all_ge(1)) continue;
            int j = target.find(tgt);
            if (j >= 0) out.coords[static_cast<std::size_t>(j)] += ci * c;
        }
    }
    return out;
}

std::vector<ClassVector> kernel_intersection(const CohomologyBasis& source,
                                             const std::vector<MultiPoly>& polys) {
    const FieldCtx* ctx = source.ctx;
    if (source.dim() == 0) return {};

    std::vector<CohomologyBasis> targets;
    int total_rows = 0;
    for (const auto& f : polys) {
        Bideg d = homogeneous_degree(f, source.ambient);
        Bideg tw{source.twist.first - d.first, source.twist.second - d.second};
        targets.push_back(basis_for_twist(source.ambient, tw, ctx));
        total_rows += targets.back().dim();
    }

    Mat constraints(ctx, std::max(total_rows, 1), source.dim());
    int row0 = 0;
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
        const CohomologyBasis& tgt = targets[pi];
        if (tgt.dim() == 0) continue;
        for (int col = 0; col < source.dim(); ++col) {
            ClassVector img = mul_project(ClassVector::unit(source, col), polys[pi], tgt);
            for (int r = 0; r < tgt.dim(); ++r)
                constraints.at(row0 + r, col) = img.coords[static_cast<std::size_t>(r)];
        }
        row0 += tgt.dim();
    }

    std::vector<ClassVector> out;
    for (auto& vec : nullspace(std::move(constraints))) {
        ClassVector cv;
        cv.basis = &source;
        cv.coords = std::move(vec);
        out.push_back(std::move(cv));
    }
    return out;
}

}  // namespace prank
