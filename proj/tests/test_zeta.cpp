#include <doctest.h>

#include "prank/frobenius.hpp"
#include "prank/zeta.hpp"

using namespace prank;

namespace {

CurveGeometry plane_curve(const MultiPoly& f) {
    return CurveGeometry{Ambient::projective(2), {f}, f.ctx()};
}

MultiPoly fermat_cubic(const FieldCtx* ctx) {
    MultiPoly f(ctx, 3);
    f.add_term({3, 0, 0}, fq_one(ctx));
    f.add_term({0, 3, 0}, fq_one(ctx));
    f.add_term({0, 0, 3}, fq_one(ctx));
    return f;
}

MultiPoly ordinary_cubic2(const FieldCtx* ctx) {
    // y^2 z + xyz = x^3 + z^3: smooth and ordinary over F_2
    MultiPoly f(ctx, 3);
    f.add_term({3, 0, 0}, fq_one(ctx));
    f.add_term({1, 1, 1}, fq_one(ctx));
    f.add_term({0, 2, 1}, fq_one(ctx));
    f.add_term({0, 0, 3}, fq_one(ctx));
    return f;
}

}  // namespace

TEST_CASE("point counts of small cubics") {
    auto F2 = field_make(2, 1);
    CHECK(count_points(plane_curve(ordinary_cubic2(F2.get())), 1) == 4);
    CHECK(count_points(plane_curve(fermat_cubic(F2.get())), 1) == 3);

    auto F3 = field_make(3, 1);
    MultiPoly ss(F3.get(), 3);  // y^2 = x^3 - x
    ss.add_term({3, 0, 0}, fq_one(F3.get()));
    ss.add_term({1, 0, 2}, -fq_one(F3.get()));
    ss.add_term({0, 2, 1}, -fq_one(F3.get()));
    CHECK(count_points(plane_curve(ss), 1) == 4);
}

TEST_CASE("elliptic zeta numerators") {
    auto F2 = field_make(2, 1);
    ZetaData z2 = zeta_data(plane_curve(ordinary_cubic2(F2.get())), 1);
    CHECK(z2.counts == std::vector<long long>{4});
    CHECK(z2.numerator == std::vector<long long>{1, 1, 2});
    CHECK(p_rank_from_zeta(z2.numerator, 2) == 1);

    ZetaData s2 = zeta_data(plane_curve(fermat_cubic(F2.get())), 1);
    CHECK(s2.numerator == std::vector<long long>{1, 0, 2});
    CHECK(p_rank_from_zeta(s2.numerator, 2) == 0);

    auto F3 = field_make(3, 1);
    MultiPoly ss(F3.get(), 3);  // y^2 = x^3 - x: supersingular
    ss.add_term({3, 0, 0}, fq_one(F3.get()));
    ss.add_term({1, 0, 2}, -fq_one(F3.get()));
    ss.add_term({0, 2, 1}, -fq_one(F3.get()));
    CHECK(zeta_data(plane_curve(ss), 1).numerator == std::vector<long long>{1, 0, 3});

    MultiPoly od(F3.get(), 3);  // y^2 = x^3 + x^2 + 1: ordinary, N_1 = 6
    od.add_term({3, 0, 0}, fq_one(F3.get()));
    od.add_term({2, 0, 1}, fq_one(F3.get()));
    od.add_term({0, 0, 3}, fq_one(F3.get()));
    od.add_term({0, 2, 1}, -fq_one(F3.get()));
    ZetaData z3 = zeta_data(plane_curve(od), 1);
    CHECK(z3.counts == std::vector<long long>{6});
    CHECK(z3.numerator == std::vector<long long>{1, 2, 3});
    CHECK(p_rank_from_zeta(z3.numerator, 3) == 1);
}

TEST_CASE("genus-3 zeta agrees with the Hasse-Witt stable rank") {
    auto F3 = field_make(3, 1);
    const FieldCtx* ctx = F3.get();
    MultiPoly fermat4(ctx, 3);
    fermat4.add_term({4, 0, 0}, fq_one(ctx));
    fermat4.add_term({0, 4, 0}, fq_one(ctx));
    fermat4.add_term({0, 0, 4}, fq_one(ctx));

    ZetaData z = zeta_data(plane_curve(fermat4), 3);
    CHECK(z.counts[0] == 4);  // over F_3 the quartic counts like a conic
    REQUIRE(z.numerator.size() == 7);
    CHECK(z.numerator[0] == 1);
    for (int i = 0; i <= 3; ++i) {
        long long scale = 1;
        for (int s = 0; s < 3 - i; ++s) scale *= 3;
        CHECK(z.numerator[static_cast<std::size_t>(6 - i)] ==
              scale * z.numerator[static_cast<std::size_t>(i)]);
    }
    int sigma = p_rank_from_zeta(z.numerator, 3);
    CHECK(sigma == stable_rank(frobenius_plane(fermat4).map));
    CHECK(sigma == 0);
}

TEST_CASE("intersection curve and its quadric-surface image count alike") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq one = fq_one(ctx);
    Fq lam(ctx, {0, 1});

    MultiPoly q(ctx, 4);
    q.add_term({1, 0, 0, 1}, one);
    q.add_term({0, 1, 1, 0}, -one);
    MultiPoly c(ctx, 4);
    c.add_term({0, 3, 0, 0}, one);
    c.add_term({0, 0, 3, 0}, one);
    c.add_term({0, 0, 0, 3}, one);
    c.add_term({3, 0, 0, 0}, lam);
    CurveGeometry ci{Ambient::projective(3), {q, c}, ctx};

    MultiPoly f(ctx, 4);
    f.add_term({3, 0, 0, 3}, one);
    f.add_term({0, 3, 3, 0}, one);
    f.add_term({0, 0, 3, 3}, one);
    f.add_term({3, 3, 0, 0}, lam);
    CurveGeometry hz{Ambient::hirzebruch(0), {f}, ctx};

    for (int ext = 1; ext <= 2; ++ext)
        CHECK(count_points(ci, ext) == count_points(hz, ext));
}

TEST_CASE("budget and validation guards") {
    auto F2 = field_make(2, 1);
    CHECK_THROWS_AS(count_points(plane_curve(ordinary_cubic2(F2.get())), 25), spec_error);
    // N_1 = 8 over F_3 violates the genus-1 Weil bound
    CHECK_THROWS_AS(zeta_numerator({8}, 3, 1), spec_error);
}

TEST_CASE("singular point probe") {
    auto F5 = field_make(5, 1);
    const FieldCtx* ctx = F5.get();
    MultiPoly nodal(ctx, 3);  // y^2 z = x^3 + x^2 z: node at (0:0:1)
    nodal.add_term({3, 0, 0}, fq_one(ctx));
    nodal.add_term({2, 0, 1}, fq_one(ctx));
    nodal.add_term({0, 2, 1}, -fq_one(ctx));
    CHECK_FALSE(probe_singular_points(plane_curve(nodal), 1).empty());

    auto F2 = field_make(2, 1);
    CHECK(probe_singular_points(plane_curve(ordinary_cubic2(F2.get())), 2).empty());
}
