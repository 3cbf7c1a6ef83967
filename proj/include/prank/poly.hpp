#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "prank/field.hpp"

namespace prank {

inline constexpr int kMaxVars = 8;

/// Dense fixed-capacity exponent vector. Entries may go negative in
/// intermediate Cech computations; stored monomials are non-negative.
struct ExpVec {
    std::array<std::int32_t, kMaxVars> e{};
    std::uint8_t n = 0;

    ExpVec() = default;
    ExpVec(std::initializer_list<std::int32_t> init) {
        n = static_cast<std::uint8_t>(init.size());
        int i = 0;
        for (auto v : init) e[i++] = v;
    }
    static ExpVec zeros(int nvars) {
        ExpVec v;
        v.n = static_cast<std::uint8_t>(nvars);
        return v;
    }

    std::int32_t operator[](int i) const { return e[i]; }
    std::int32_t& operator[](int i) { return e[i]; }
    int size() const { return n; }

    long total() const {
        long t = 0;
        for (int i = 0; i < n; ++i) t += e[i];
        return t;
    }
    ExpVec operator+(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < n; ++i) r.e[i] += o.e[i];
        return r;
    }
    ExpVec operator-(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < n; ++i) r.e[i] -= o.e[i];
        return r;
    }
    ExpVec scaled(std::int32_t s) const {
        ExpVec r = *this;
        for (int i = 0; i < n; ++i) r.e[i] *= s;
        return r;
    }
    bool all_ge(std::int32_t bound) const {
        for (int i = 0; i < n; ++i)
            if (e[i] < bound) return false;
        return true;
    }
    bool operator==(const ExpVec& o) const {
        if (n != o.n) return false;
        for (int i = 0; i < n; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    // graded-lex: total degree first, then lexicographic
    bool operator<(const ExpVec& o) const {
        long ta = total(), tb = o.total();
        if (ta != tb) return ta < tb;
        for (int i = 0; i < n; ++i)
            if (e[i] != o.e[i]) return e[i] < o.e[i];
        return false;
    }
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < v.n; ++i) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v.e[i]));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ v.n);
    }
};

/// Sparse multivariate polynomial over F_{p^k}. No zero coefficients
/// are stored.
class MultiPoly {
public:
    using TermMap = std::unordered_map<ExpVec, Fq, ExpVecHash>;

    MultiPoly() : ctx_(nullptr), nvars_(0) {}
    MultiPoly(const FieldCtx* ctx, int nvars) : ctx_(ctx), nvars_(nvars) {}

    const FieldCtx* ctx() const { return ctx_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const ExpVec& exps, const Fq& c);
    Fq coeff(const ExpVec& exps) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;

    /// a^e by binary exponentiation, e >= 0.
    MultiPoly pow(unsigned e) const;

    /// Termwise Frobenius: exps -> p*exps, coeff -> coeff^p. Equals pow(p).
    MultiPoly frobenius() const;

    /// Dehomogenize: set variable `var` to 1, dropping it from the
    /// exponent vectors (result has nvars-1 variables).
    MultiPoly dehomogenize(int var) const;

    /// Swap two variables.
    MultiPoly swap_vars(int a, int b) const;

    /// Formal partial derivative with respect to variable `var`.
    MultiPoly derivative(int var) const;

    /// Evaluate at a point (length nvars).
    Fq eval(const std::vector<Fq>& point) const;

    static MultiPoly one(const FieldCtx* ctx, int nvars);

private:
    const FieldCtx* ctx_;
    int nvars_;
    TermMap terms_;
};

}  // namespace prank
