#include "prank/semilinear.hpp"

namespace prank {

std::vector<Fq> SemilinearMap::apply(const std::vector<Fq>& v) const {
    std::vector<Fq> twisted(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) twisted[i] = v[i].pow_p(twist);
    return matrix.apply(twisted);
}

std::vector<Fq> SemilinearMap::apply_iterate(std::vector<Fq> v, int t) const {
    for (int i = 0; i < t; ++i) v = apply(v);
    return v;
}

Mat composite_matrix(const SemilinearMap& m, int t) {
    const int n = m.dim();
    if (t == 0) return Mat::identity(m.ctx(), n);
    Mat acc = m.matrix;
    for (int i = 1; i < t; ++i)
        acc = acc * m.matrix.entrywise_pow_p(static_cast<long>(i) * m.twist);
    return acc;
}

int stable_rank(const SemilinearMap& m) {
    if (m.dim() == 0) return 0;
    return rank(composite_matrix(m, m.dim()));
}

int kernel_dim(const SemilinearMap& m) { return m.dim() - rank(m.matrix); }

bool is_ordinary(const SemilinearMap& m) { return kernel_dim(m) == 0; }

InvariantBundle invariants(const SemilinearMap& m) {
    InvariantBundle b;
    b.dim = m.dim();
    b.sigma = stable_rank(m);
    b.a_number = kernel_dim(m);
    b.ordinary = b.sigma == b.dim;
    b.composite_charpoly = charpoly(composite_matrix(m, m.dim()));
    return b;
}

}  // namespace prank
