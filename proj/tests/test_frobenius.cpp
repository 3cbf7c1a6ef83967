#include <doctest.h>

#include "prank/frobenius.hpp"

using namespace prank;

namespace {

// entry of the action matrix addressed by exponent vectors
Fq entry(const FrobeniusAction& act, const ExpVec& row, const ExpVec& col) {
    int r = act.full_basis.find(row);
    int c = act.full_basis.find(col);
    REQUIRE(r >= 0);
    REQUIRE(c >= 0);
    return act.map.matrix.at(r, c);
}

}  // namespace

TEST_CASE("cubic Hasse-Witt entries over F2") {
    auto F2 = field_make(2, 1);
    const FieldCtx* ctx = F2.get();
    Fq one = fq_one(ctx);

    MultiPoly fermat(ctx, 3);  // x^3 + y^3 + z^3, no xyz term: supersingular
    fermat.add_term({3, 0, 0}, one);
    fermat.add_term({0, 3, 0}, one);
    fermat.add_term({0, 0, 3}, one);
    FrobeniusAction a = frobenius_plane(fermat);
    REQUIRE(a.map.dim() == 1);
    CHECK(a.map.matrix.at(0, 0).is_zero());
    CHECK(stable_rank(a.map) == 0);

    MultiPoly ord(ctx, 3);  // y^2 z + xyz = x^3 + z^3: smooth, ordinary
    ord.add_term({3, 0, 0}, one);
    ord.add_term({1, 1, 1}, one);
    ord.add_term({0, 2, 1}, one);
    ord.add_term({0, 0, 3}, one);
    FrobeniusAction b = frobenius_plane(ord);
    CHECK(b.map.matrix.at(0, 0) == one);
    CHECK(is_ordinary(b.map));
}

TEST_CASE("cubic Hasse-Witt entries over F3") {
    auto F3 = field_make(3, 1);
    const FieldCtx* ctx = F3.get();
    Fq one = fq_one(ctx);

    MultiPoly ss(ctx, 3);  // x^3 - x z^2 - y^2 z, i.e. y^2 = x^3 - x
    ss.add_term({3, 0, 0}, one);
    ss.add_term({1, 0, 2}, -one);
    ss.add_term({0, 2, 1}, -one);
    // coeff of (xyz)^2 in f^2 is 0: supersingular at p = 3
    CHECK(frobenius_plane(ss).map.matrix.at(0, 0).is_zero());

    MultiPoly od(ctx, 3);  // x^3 + x^2 z - y^2 z, i.e. y^2 = x^3 + x^2
    od.add_term({3, 0, 0}, one);
    od.add_term({2, 0, 1}, one);
    od.add_term({0, 2, 1}, -one);
    // coeff of (xyz)^2 in f^2 is -2 = 1
    CHECK(frobenius_plane(od).map.matrix.at(0, 0) == one);
}

TEST_CASE("plane action dimensions follow the genus formula") {
    auto F5 = field_make(5, 1);
    const FieldCtx* ctx = F5.get();
    for (long d = 3; d <= 7; ++d) {
        MultiPoly f(ctx, 3);
        f.add_term({static_cast<std::int32_t>(d), 0, 0}, fq_one(ctx));
        f.add_term({0, static_cast<std::int32_t>(d), 0}, fq_one(ctx));
        f.add_term({0, 0, static_cast<std::int32_t>(d)}, fq_one(ctx));
        CHECK(frobenius_plane(f).map.dim() == (d - 1) * (d - 2) / 2);
    }
}

TEST_CASE("quadric-cubic intersection in P^3 over F4") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq one = fq_one(ctx);
    Fq lam(ctx, {0, 1});

    MultiPoly q(ctx, 4);  // xw - yz
    q.add_term({1, 0, 0, 1}, one);
    q.add_term({0, 1, 1, 0}, -one);
    MultiPoly c(ctx, 4);  // y^3 + z^3 + w^3 + lam x^3
    c.add_term({0, 3, 0, 0}, one);
    c.add_term({0, 0, 3, 0}, one);
    c.add_term({0, 0, 0, 3}, one);
    c.add_term({3, 0, 0, 0}, lam);

    FrobeniusAction act = frobenius_ci({q, c}, 3);
    REQUIRE(act.map.dim() == 4);
    REQUIRE(act.kernel.size() == 4);

    // permutation-with-scalar action, read off by exponent vector
    CHECK(entry(act, ExpVec{1, 1, 1, 2}, ExpVec{2, 1, 1, 1}) == lam);
    CHECK(entry(act, ExpVec{1, 1, 2, 1}, ExpVec{1, 2, 1, 1}) == one);
    CHECK(entry(act, ExpVec{1, 2, 1, 1}, ExpVec{1, 1, 2, 1}) == one);
    CHECK(entry(act, ExpVec{2, 1, 1, 1}, ExpVec{1, 1, 1, 2}) == one);
    // everything else vanishes
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!act.map.matrix.at(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 4);

    InvariantBundle inv = invariants(act.map);
    CHECK(inv.sigma == 4);
    CHECK(inv.ordinary);
}

TEST_CASE("single-equation intersection agrees with the plane action") {
    auto F3 = field_make(3, 1);
    const FieldCtx* ctx = F3.get();
    MultiPoly f(ctx, 3);  // smooth quartic x^4 + y^4 + z^4 + x y z^2
    f.add_term({4, 0, 0}, fq_one(ctx));
    f.add_term({0, 4, 0}, fq_one(ctx));
    f.add_term({0, 0, 4}, fq_one(ctx));
    f.add_term({1, 1, 2}, fq_one(ctx));
    FrobeniusAction plane = frobenius_plane(f);
    FrobeniusAction ci = frobenius_ci({f}, 2);
    REQUIRE(plane.map.dim() == ci.map.dim());
    CHECK(plane.map.matrix == ci.map.matrix);
}

TEST_CASE("bidegree (3,3) curve on the quadric surface") {
    auto F4 = field_make(2, 2);
    const FieldCtx* ctx = F4.get();
    Fq one = fq_one(ctx);
    Fq lam(ctx, {0, 1});

    // Segre image of the intersection above
    MultiPoly f(ctx, 4);
    f.add_term({3, 0, 0, 3}, one);
    f.add_term({0, 3, 3, 0}, one);
    f.add_term({0, 0, 3, 3}, one);
    f.add_term({3, 3, 0, 0}, lam);

    FrobeniusAction act = frobenius_hirzebruch(0, f);
    REQUIRE(act.map.dim() == 4);
    CHECK(entry(act, ExpVec{2, 2, 1, 1}, ExpVec{1, 1, 2, 2}) == one);
    CHECK(entry(act, ExpVec{2, 1, 1, 2}, ExpVec{1, 2, 2, 1}) == one);
    CHECK(entry(act, ExpVec{1, 2, 2, 1}, ExpVec{2, 1, 1, 2}) == one);
    CHECK(entry(act, ExpVec{1, 1, 2, 2}, ExpVec{2, 2, 1, 1}) == lam);

    InvariantBundle inv = invariants(act.map);
    CHECK(inv.sigma == 4);
    CHECK(inv.ordinary);
}

TEST_CASE("inhomogeneous input is rejected") {
    auto F2 = field_make(2, 1);
    MultiPoly f(F2.get(), 3);
    f.add_term({3, 0, 0}, fq_one(F2.get()));
    f.add_term({1, 0, 0}, fq_one(F2.get()));
    CHECK_THROWS_AS(frobenius_plane(f), spec_error);
}
