#include <doctest.h>

#include <random>

#include "prank/semilinear.hpp"

using namespace prank;

namespace {

Mat random_mat(const FieldCtx* ctx, int n, std::mt19937_64& rng) {
    Mat m(ctx, n, n);
    std::uint64_t q = ctx->order_u64();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = element_by_index(ctx, rng() % q);
    return m;
}

}  // namespace

TEST_CASE("1x1 maps") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq g(ctx, {0, 1});

    SemilinearMap unit{Mat(ctx, 1, 1), 1};
    unit.matrix.at(0, 0) = g;
    CHECK(stable_rank(unit) == 1);
    CHECK(is_ordinary(unit));
    CHECK(kernel_dim(unit) == 0);
    // g * 1^2 = g
    CHECK(unit.apply({fq_one(ctx)})[0] == g);
    // g * g^2 = g^3 = 1
    CHECK(unit.apply({g})[0] == fq_one(ctx));

    SemilinearMap nil{Mat(ctx, 1, 1), 1};
    CHECK(stable_rank(nil) == 0);
    CHECK(kernel_dim(nil) == 1);
    CHECK_FALSE(is_ordinary(nil));
}

TEST_CASE("full-rank single step can still have stable rank zero") {
    auto F3 = field_make(3, 1);
    const FieldCtx* ctx = F3.get();
    SemilinearMap m{Mat(ctx, 2, 2), 1};
    m.matrix.at(0, 1) = fq_one(ctx);  // strictly upper: A^2 = 0
    CHECK(kernel_dim(m) == 1);
    CHECK(stable_rank(m) == 0);
    InvariantBundle inv = invariants(m);
    CHECK(inv.dim == 2);
    CHECK(inv.sigma == 0);
    CHECK(inv.a_number == 1);
    CHECK_FALSE(inv.ordinary);
}

TEST_CASE("diagonal map over F4 composes to the identity") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq g(ctx, {0, 1});
    SemilinearMap m{Mat::identity(ctx, 2), 1};
    m.matrix.at(0, 0) = g;
    // composite over 2 steps: diag(g * g^2, 1) = I
    CHECK(composite_matrix(m, 2) == Mat::identity(ctx, 2));
    InvariantBundle inv = invariants(m);
    CHECK(inv.sigma == 2);
    CHECK(inv.a_number == 0);
    CHECK(inv.ordinary);
    // charpoly of I_2 is (x-1)^2 = 1 - 2x + x^2 = 1 + 0x + x^2 in char 2
    REQUIRE(inv.composite_charpoly.size() == 3);
    CHECK(inv.composite_charpoly[0] == fq_one(ctx));
    CHECK(inv.composite_charpoly[1].is_zero());
    CHECK(inv.composite_charpoly[2] == fq_one(ctx));
}

TEST_CASE("apply is p-semilinear and apply_iterate matches composite_matrix") {
    std::mt19937_64 rng(13);
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 2}, {3, 1}, {5, 2}}) {
        auto F = field_make(p, k);
        const FieldCtx* ctx = F.get();
        std::uint64_t q = ctx->order_u64();
        for (int trial = 0; trial < 10; ++trial) {
            for (int twist : {1, -1}) {
                SemilinearMap m{random_mat(ctx, 4, rng), twist};
                std::vector<Fq> v(4, fq_zero(ctx));
                for (auto& c : v) c = element_by_index(ctx, rng() % q);
                Fq c = element_by_index(ctx, rng() % q);

                std::vector<Fq> scaled = v;
                for (auto& x : scaled) x = c * x;
                std::vector<Fq> lhs = m.apply(scaled);
                std::vector<Fq> rhs = m.apply(v);
                Fq cp = c.pow_p(twist);
                for (int i = 0; i < 4; ++i) CHECK(lhs[static_cast<std::size_t>(i)] == cp * rhs[static_cast<std::size_t>(i)]);

                for (int t = 0; t <= 3; ++t) {
                    std::vector<Fq> it = m.apply_iterate(v, t);
                    // composite is linear only after undoing the twist powers
                    std::vector<Fq> tw = v;
                    for (auto& x : tw) x = x.pow_p(static_cast<long>(t) * twist);
                    std::vector<Fq> cm = composite_matrix(m, t).apply(tw);
                    for (int i = 0; i < 4; ++i) CHECK(it[static_cast<std::size_t>(i)] == cm[static_cast<std::size_t>(i)]);
                }
            }
        }
    }
}

TEST_CASE("iterate ranks decrease and stabilize by t = dim") {
    std::mt19937_64 rng(29);
    auto F = field_make(2, 1);
    const FieldCtx* ctx = F.get();
    for (int trial = 0; trial < 40; ++trial) {
        SemilinearMap m{random_mat(ctx, 5, rng), 1};
        int prev = 5;
        for (int t = 1; t <= 7; ++t) {
            int r = rank(composite_matrix(m, t));
            CHECK(r <= prev);
            if (t >= 5) CHECK(r == stable_rank(m));
            prev = r;
        }
        InvariantBundle inv = invariants(m);
        CHECK(inv.a_number <= inv.dim - inv.sigma);
        CHECK(inv.ordinary == (inv.sigma == inv.dim && inv.a_number == 0));
    }
}
