#pragma once

#include <vector>

#include "prank/field.hpp"

namespace prank {

/// Dense matrix over F_{p^k}, row-major.
class Mat {
public:
    Mat() : rows_(0), cols_(0), ctx_(nullptr) {}
    Mat(const FieldCtx* ctx, int rows, int cols)
        : rows_(rows), cols_(cols), ctx_(ctx),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fq_zero(ctx)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldCtx* ctx() const { return ctx_; }

    Fq& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Fq& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    static Mat identity(const FieldCtx* ctx, int n);
    Mat operator*(const Mat& o) const;
    std::vector<Fq> apply(const std::vector<Fq>& v) const;

    /// Entrywise x -> x^(p^e).
    Mat entrywise_pow_p(long e) const;

    bool operator==(const Mat& o) const;

private:
    int rows_, cols_;
    const FieldCtx* ctx_;
    std::vector<Fq> a_;
};

/// In-place reduced row echelon form with first-nonzero pivoting.
/// Returns the pivot column indices in order.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Canonical null-space basis from the RREF: one vector per free column,
/// unit at its free column, zeros at the other free columns.
std::vector<std::vector<Fq>> nullspace(Mat m);

/// Characteristic polynomial, ascending coefficients, length n+1,
/// monic. Hessenberg reduction; valid over any field.
std::vector<Fq> charpoly(Mat m);

}  // namespace prank
