#include "prank/linalg.hpp"

namespace prank {

Mat Mat::identity(const FieldCtx* ctx, int n) {
    Mat m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = fq_one(ctx);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw internal_error("matrix dimension mismatch");
    Mat r(ctx_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Fq& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Fq& bkj = o.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

std::vector<Fq> Mat::apply(const std::vector<Fq>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw internal_error("vector length mismatch");
    std::vector<Fq> r(static_cast<std::size_t>(rows_), fq_zero(ctx_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[static_cast<std::size_t>(j)].is_zero())
                r[static_cast<std::size_t>(i)] += at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

Mat Mat::entrywise_pow_p(long e) const {
    Mat r(ctx_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).pow_p(e);
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
        Fq inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Fq f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Fq>> nullspace(Mat m) {
    const FieldCtx* ctx = m.ctx();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Fq>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Fq> v(static_cast<std::size_t>(m.cols()), fq_zero(ctx));
        v[static_cast<std::size_t>(free)] = fq_one(ctx);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Fq> charpoly(Mat m) {
    const FieldCtx* ctx = m.ctx();
    const int n = m.rows();
    if (m.cols() != n) throw internal_error("charpoly needs a square matrix");
    if (n == 0) return {fq_one(ctx)};

    // similarity reduction to upper Hessenberg form
    for (int col = 0; col < n - 2; ++col) {
        int pr = -1;
        for (int i = col + 1; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(m.at(i, pr), m.at(i, col + 1));
        }
        Fq inv = m.at(col + 1, col).inverse();
        for (int i = col + 2; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Fq f = m.at(i, col) * inv;
            for (int j = 0; j < n; ++j) m.at(i, j) -= f * m.at(col + 1, j);
            for (int r = 0; r < n; ++r) m.at(r, col + 1) += f * m.at(r, i);
        }
    }

    // charpoly recurrence on the Hessenberg form
    // p_0 = 1; p_m(t) = (t - h[m-1][m-1]) p_{m-1}
    //          - sum_{i=1}^{m-1} h[m-1-i][m-1] (prod subdiagonals) p_{m-1-i}
    std::vector<std::vector<Fq>> p(static_cast<std::size_t>(n) + 1);
    p[0] = {fq_one(ctx)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Fq> cur(static_cast<std::size_t>(k) + 1, fq_zero(ctx));
        // (t - h[k-1][k-1]) * p[k-1]
        for (std::size_t j = 0; j < p[static_cast<std::size_t>(k) - 1].size(); ++j) {
            cur[j + 1] += p[static_cast<std::size_t>(k) - 1][j];
            cur[j] -= m.at(k - 1, k - 1) * p[static_cast<std::size_t>(k) - 1][j];
        }
        Fq prod = fq_one(ctx);
        for (int i = 1; i < k; ++i) {
            prod *= m.at(k - i, k - i - 1);
            if (prod.is_zero()) break;
            Fq c = m.at(k - 1 - i, k - 1) * prod;
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < p[static_cast<std::size_t>(k - 1 - i)].size(); ++j)
                cur[j] -= c * p[static_cast<std::size_t>(k - 1 - i)][j];
        }
        p[static_cast<std::size_t>(k)] = std::move(cur);
    }
    return p[static_cast<std::size_t>(n)];
}

}  // namespace prank
