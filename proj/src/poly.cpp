#include "prank/poly.hpp"

namespace prank {

void MultiPoly::add_term(const ExpVec& exps, const Fq& c) {
    if (c.is_zero()) return;
    if (exps.size() != nvars_) throw internal_error("exponent vector length mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Fq MultiPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? fq_zero(ctx_) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (ctx_ != o.ctx_ || nvars_ != o.nvars_)
        throw spec_error("polynomial context/variable mismatch in addition");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (ctx_ != o.ctx_ || nvars_ != o.nvars_)
        throw spec_error("polynomial context/variable mismatch in multiplication");
    MultiPoly r(ctx_, nvars_);
    r.terms_.reserve(terms_.size() * o.terms_.size() / 2 + 1);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = one(ctx_, nvars_);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

MultiPoly MultiPoly::frobenius() const {
    MultiPoly r(ctx_, nvars_);
    const auto p = static_cast<std::int32_t>(ctx_->p());
    for (const auto& [e, c] : terms_) r.add_term(e.scaled(p), c.pow_p(1));
    return r;
}

MultiPoly MultiPoly::dehomogenize(int var) const {
    MultiPoly r(ctx_, nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        ExpVec out = ExpVec::zeros(nvars_ - 1);
        int j = 0;
        for (int i = 0; i < nvars_; ++i)
            if (i != var) out[j++] = e[i];
        r.add_term(out, c);
    }
    return r;
}

MultiPoly MultiPoly::swap_vars(int a, int b) const {
    MultiPoly r(ctx_, nvars_);
    for (const auto& [e, c] : terms_) {
        ExpVec out = e;
        std::swap(out[a], out[b]);
        r.add_term(out, c);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(ctx_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Fq factor = c * Fq(ctx_, static_cast<std::uint64_t>(e[var]) % ctx_->p());
        if (factor.is_zero()) continue;
        ExpVec out = e;
        out[var] -= 1;
        r.add_term(out, factor);
    }
    return r;
}

Fq MultiPoly::eval(const std::vector<Fq>& point) const {
    Fq acc = fq_zero(ctx_);
    for (const auto& [e, c] : terms_) {
        Fq t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= point[static_cast<std::size_t>(i)].pow(static_cast<std::uint64_t>(e[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::one(const FieldCtx* ctx, int nvars) {
    MultiPoly r(ctx, nvars);
    r.add_term(ExpVec::zeros(nvars), fq_one(ctx));
    return r;
}

}  // namespace prank
