#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "abcopt/lspace.hpp"

using namespace abcopt;

TEST_CASE("evaluation") {
    CHECK(eval(LFunc{2.0, 1.0}, 3.0) == 19.0);
    CHECK(eval(LFunc{0.0, 0.0}, 7.0) == 0.0);
    CHECK(eval(LFunc{-1.0, 0.0}, 1.0) == -1.0);
}

TEST_CASE("even symmetry of every element") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const LFunc l{U(rng), U(rng)};
        const double x = U(rng);
        CHECK(eval(l, x) == eval(l, -x));
    }
}

TEST_CASE("addition") {
    CHECK(add(LFunc{1.0, 0.0}, LFunc{2.0, 3.0}) == LFunc{3.0, 3.0});
    const LFunc l{4.5, -2.0};
    CHECK(add(l, zero()) == l);
    CHECK(add(LFunc{1.0, 1.0}, LFunc{-1.0, -1.0}) == zero());
}

TEST_CASE("scaling") {
    CHECK(scale(LFunc{2.0, 4.0}, 0.5) == LFunc{1.0, 2.0});
    CHECK(scale(LFunc{3.0, -7.0}, 0.0) == zero());
    CHECK(scale(LFunc{-2.0, 0.0}, -1.0) == LFunc{2.0, 0.0});
}

TEST_CASE("zero element") {
    CHECK(eval(zero(), 5.0) == 0.0);
    CHECK(add(zero(), zero()) == zero());
    CHECK(scale(zero(), 3.0) == zero());
}

TEST_CASE("vector space axioms hold exactly on dyadic coefficients") {
    // Dyadic rationals keep double arithmetic exact, so the axioms can be
    // asserted with equality instead of a tolerance.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> I(-1024, 1024);
    auto dyadic = [&] { return I(rng) / 16.0; };
    for (int i = 0; i < 1000; ++i) {
        const LFunc l1{dyadic(), dyadic()}, l2{dyadic(), dyadic()}, l3{dyadic(), dyadic()};
        const double s = dyadic();
        CHECK(add(add(l1, l2), l3) == add(l1, add(l2, l3)));
        CHECK(add(l1, l2) == add(l2, l1));
        CHECK(add(l1, zero()) == l1);
        CHECK(add(l1, scale(l1, -1.0)) == zero());
        CHECK(scale(add(l1, l2), s) == add(scale(l1, s), scale(l2, s)));
    }
}

TEST_CASE("commutativity and inverses on arbitrary reals") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const LFunc l1{U(rng), U(rng)}, l2{U(rng), U(rng)};
        CHECK(add(l1, l2) == add(l2, l1));
        CHECK(add(l1, zero()) == l1);
        CHECK(add(l1, scale(l1, -1.0)) == zero());
    }
}

TEST_CASE("evaluation is linear in the element") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const LFunc l1{U(rng), U(rng)}, l2{U(rng), U(rng)};
        const double s = U(rng), x = U(rng);
        const double lhs = eval(add(scale(l1, s), l2), x);
        const double rhs = s * eval(l1, x) + eval(l2, x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}
