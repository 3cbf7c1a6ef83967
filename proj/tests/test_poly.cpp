#include <doctest.h>

#include <random>

#include "prank/poly.hpp"

using namespace prank;

namespace {

MultiPoly random_poly(const FieldCtx* ctx, int nvars, int max_deg, int nterms,
                      std::mt19937_64& rng) {
    MultiPoly f(ctx, nvars);
    std::uint64_t q = ctx->order_u64();
    for (int t = 0; t < nterms; ++t) {
        ExpVec e = ExpVec::zeros(nvars);
        for (int i = 0; i < nvars; ++i)
            e[i] = static_cast<std::int32_t>(rng() % static_cast<unsigned>(max_deg + 1));
        f.add_term(e, element_by_index(ctx, rng() % q));
    }
    return f;
}

}  // namespace

TEST_CASE("product of the two quadric/cubic generators") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq lam(ctx, {0, 1});
    MultiPoly f(ctx, 4);  // xw - yz
    f.add_term({1, 0, 0, 1}, fq_one(ctx));
    f.add_term({0, 1, 1, 0}, -fq_one(ctx));
    MultiPoly g(ctx, 4);  // y^3 + z^3 + w^3 + lam x^3
    g.add_term({0, 3, 0, 0}, fq_one(ctx));
    g.add_term({0, 0, 3, 0}, fq_one(ctx));
    g.add_term({0, 0, 0, 3}, fq_one(ctx));
    g.add_term({3, 0, 0, 0}, lam);

    MultiPoly fg = f * g;
    CHECK(fg.term_count() == 8);
    CHECK(fg.coeff(ExpVec{4, 0, 0, 1}) == lam);    // lam x^4 w
    CHECK(fg.coeff(ExpVec{3, 1, 1, 0}) == -lam);   // -lam x^3 y z
    CHECK(fg.coeff(ExpVec{2, 2, 1, 0}).is_zero());
    for (const auto& [e, c] : fg.terms()) CHECK(e.total() == 5);

    SUBCASE("identity and char-2 square") {
        CHECK((f * MultiPoly::one(ctx, 4)).terms() == f.terms());
        MultiPoly xy(ctx, 2);
        xy.add_term({1, 0}, fq_one(ctx));
        xy.add_term({0, 1}, fq_one(ctx));
        MultiPoly sq = xy * xy;
        CHECK(sq.term_count() == 2);
        CHECK(sq.coeff(ExpVec{2, 0}) == fq_one(ctx));
        CHECK(sq.coeff(ExpVec{1, 1}).is_zero());
    }
}

TEST_CASE("poly_pow against hand multinomial") {
    auto F7 = field_make(7, 1);
    const FieldCtx* ctx = F7.get();
    MultiPoly f(ctx, 3);  // x^5 + y^3 z^2 + A xyz^3 + B xz^4, A=1, B=2
    f.add_term({5, 0, 0}, fq_one(ctx));
    f.add_term({0, 3, 2}, fq_one(ctx));
    f.add_term({1, 1, 3}, Fq(ctx, 1));
    f.add_term({1, 0, 4}, Fq(ctx, 2));
    MultiPoly f6 = f.pow(6);
    for (const auto& [e, c] : f6.terms()) CHECK(e.total() == 30);
    // 4 copies of x^5 and 2 of y^3 z^2: C(6;4,2) = 15 = 1 mod 7
    CHECK(f6.coeff(ExpVec{20, 6, 4}) == Fq(ctx, 1));

    CHECK(f.pow(0).term_count() == 1);
    CHECK(f.pow(0).coeff(ExpVec{0, 0, 0}) == fq_one(ctx));

    auto F2 = field_make(2, 1);
    MultiPoly h(F2.get(), 2);
    h.add_term({1, 1}, fq_one(F2.get()));
    CHECK(h.pow(1).terms() == h.terms());  // p - 1 = 1 when p = 2
}

TEST_CASE("poly_pow(p) is the termwise Frobenius") {
    std::mt19937_64 rng(23);
    for (auto [p, k] : {std::pair<unsigned, unsigned>{2, 2}, {3, 1}, {5, 1}}) {
        auto F = field_make(p, k);
        for (int t = 0; t < 17; ++t) {
            MultiPoly f = random_poly(F.get(), 3, 4, 5, rng);
            CHECK(f.pow(p).terms() == f.frobenius().terms());
        }
    }
}

TEST_CASE("multiplication is commutative and associative, degrees add") {
    auto F9 = field_make(3, 2);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        MultiPoly a = random_poly(F9.get(), 3, 3, 4, rng);
        MultiPoly b = random_poly(F9.get(), 3, 3, 4, rng);
        MultiPoly c = random_poly(F9.get(), 3, 3, 4, rng);
        CHECK((a * b).terms() == (b * a).terms());
        CHECK(((a * b) * c).terms() == (a * (b * c)).terms());
    }
}

TEST_CASE("derivative and evaluation") {
    auto F5 = field_make(5, 1);
    const FieldCtx* ctx = F5.get();
    MultiPoly f(ctx, 2);  // x^5 + 2 x^2 y + y
    f.add_term({5, 0}, fq_one(ctx));
    f.add_term({2, 1}, Fq(ctx, 2));
    f.add_term({0, 1}, fq_one(ctx));
    MultiPoly fx = f.derivative(0);
    CHECK(fx.coeff(ExpVec{4, 0}).is_zero());  // 5 x^4 dies mod 5
    CHECK(fx.coeff(ExpVec{1, 1}) == Fq(ctx, 4));
    Fq v = f.eval({Fq(ctx, 2), Fq(ctx, 3)});
    // 32 + 2*4*3 + 3 = 59 = 4 mod 5
    CHECK(v == Fq(ctx, 4));
}
