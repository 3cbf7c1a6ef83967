#include <doctest.h>

#include <random>

#include "prank/field.hpp"

using namespace prank;

TEST_CASE("prime field construction") {
    auto F7 = field_make(7, 1);
    CHECK(F7->p() == 7);
    CHECK(F7->k() == 1);
}

TEST_CASE("F4 default modulus is g^2 = g + 1") {
    auto F4 = field_make(2, 2);
    CHECK(F4->modulus() == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("explicit modulus accepted and validated") {
    auto F4 = field_make(2, 2, {1, 1, 1});
    CHECK(F4->k() == 2);
    // t^2 + 1 = (t+1)^2 over F_2
    CHECK_THROWS_AS(field_make(2, 2, {1, 0, 1}), spec_error);
    CHECK_THROWS_AS(field_make(6, 1), spec_error);   // composite p
    CHECK_THROWS_AS(field_make(2, 2, {1, 1, 2}), spec_error);  // non-monic
}

TEST_CASE("frobenius in F4") {
    auto F4 = field_make(2, 2);
    Fq g(F4.get(), {0, 1});
    Fq g1(F4.get(), {1, 1});
    CHECK(g.pow_p(1) == g1);   // g^2 = g + 1
    CHECK(g1.pow_p(-1) == g);  // p-th root inverts
    auto F7 = field_make(7, 1);
    Fq three(F7.get(), 3);
    CHECK(three.pow_p(1) == three);  // Fermat
}

TEST_CASE("frobenius round trips and has period k") {
    for (auto [p, k] : {std::pair<int, int>{2, 3}, {3, 2}, {5, 2}}) {
        auto F = field_make(static_cast<std::uint64_t>(p), static_cast<unsigned>(k));
        std::uint64_t q = F->order_u64();
        for (std::uint64_t i = 0; i < q; ++i) {
            Fq x = element_by_index(F.get(), i);
            CHECK(x.pow_p(1).pow_p(-1) == x);
            CHECK(x.pow_p(static_cast<long>(k)) == x);
        }
    }
}

TEST_CASE("field axioms on random triples") {
    auto F = field_make(3, 2);
    std::mt19937_64 rng(7);
    std::uint64_t q = F->order_u64();
    for (int t = 0; t < 100; ++t) {
        Fq a = element_by_index(F.get(), rng() % q);
        Fq b = element_by_index(F.get(), rng() % q);
        Fq c = element_by_index(F.get(), rng() % q);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == fq_one(F.get()));
            CHECK(a / a == fq_one(F.get()));
        }
        CHECK(a - a == fq_zero(F.get()));
    }
}

TEST_CASE("coefficient string grammar") {
    auto F4 = field_make(2, 2);
    CHECK(parse_coeff(F4.get(), "g+1") == Fq(F4.get(), {1, 1}));
    CHECK(parse_coeff(F4.get(), " 1 + 1*g ") == Fq(F4.get(), {1, 1}));
    CHECK(parse_coeff(F4.get(), "0") == fq_zero(F4.get()));
    CHECK(parse_coeff(F4.get(), "g^2") == Fq(F4.get(), {1, 1}));  // reduced by the modulus
    auto F7 = field_make(7, 1);
    CHECK(parse_coeff(F7.get(), "10") == Fq(F7.get(), 3));
    CHECK(parse_coeff(F7.get(), "3-5") == Fq(F7.get(), 5));
    CHECK_THROWS_AS(parse_coeff(F7.get(), "g"), spec_error);
    CHECK_THROWS_AS(parse_coeff(F7.get(), "x+1"), spec_error);
    CHECK_THROWS_AS(parse_coeff(F7.get(), ""), spec_error);
}

TEST_CASE("string round trip") {
    auto F = field_make(5, 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        Fq x = element_by_index(F.get(), rng() % F->order_u64());
        CHECK(parse_coeff(F.get(), x.str()) == x);
    }
}
