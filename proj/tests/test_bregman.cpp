#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "abcopt/bregman.hpp"
#include "abcopt/errors.hpp"

using namespace abcopt;

TEST_CASE("divergence values for the example generator") {
    const BregmanGenerator gen = example_generator();
    CHECK(divergence(gen, 0.0, 0.5) == 0.25);
    CHECK(divergence(gen, 0.5, 0.5) == 0.0);
    CHECK(divergence(gen, -0.7, 0.5) == divergence(gen, 0.7, 0.5));
    CHECK(divergence(gen, -0.7, 0.5) == doctest::Approx(0.04).epsilon(1e-12));
    CHECK_THROWS_AS(divergence(gen, 1.0, 0.0), DegeneratePointError);
    CHECK_THROWS_AS(divergence(gen, 6.0, 0.5), std::invalid_argument);
}

TEST_CASE("closed form, symmetry and nonnegativity on random pairs") {
    const BregmanGenerator gen = example_generator();
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = U(rng);
        double y = U(rng);
        while (std::abs(y) < 0.05) y = U(rng);
        const double d = divergence(gen, x, y);
        const double closed =
            -std::abs(x) + std::abs(y) + (x * x - y * y) / (2.0 * std::abs(y));
        CHECK(std::abs(d - closed) <= 1e-12);
        CHECK(d == divergence(gen, x, -y));
        CHECK(d >= -1e-12);
    }
}

TEST_CASE("zero gaps appear exactly at the reflected base point") {
    const BregmanGenerator gen = example_generator();
    const int n = 401;
    for (int j = 0; j < n; ++j) {
        const double y = -5.0 + 10.0 * j / (n - 1);
        if (std::abs(y) < 0.05) continue;
        for (int i = 0; i < n; ++i) {
            const double x = -5.0 + 10.0 * i / (n - 1);
            const bool twin = std::abs(std::abs(x) - std::abs(y)) <= 1e-9;
            REQUIRE((divergence(gen, x, y) <= 1e-9) == twin);
        }
    }
}

TEST_CASE("flat and sharp divergences over sample sets") {
    const ObjectiveOracle phi = example_phi();
    const LFunc tight{-1.0, 0.0};
    const LFunc loose{-1.5, 0.0};  // synthetic looser sample, for inf/sup behaviour

    CHECK(divergence_flat(phi, 0.3, 0.5, {tight}) ==
          pointwise_divergence(phi, tight, 0.3, 0.5));
    CHECK(divergence_sharp(phi, 0.3, 0.5, {tight}) ==
          pointwise_divergence(phi, tight, 0.3, 0.5));
    CHECK(divergence_flat(phi, 0.5, 0.5, {tight, loose}) == 0.0);
    CHECK(divergence_sharp(phi, 0.5, 0.5, {tight, loose}) == 0.0);

    CHECK(divergence_flat(phi, 0.0, 0.5, {tight, loose}) == 0.125);
    CHECK(divergence_sharp(phi, 0.0, 0.5, {tight, loose}) == 0.25);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 500; ++i) {
        const double x = U(rng);
        const double flat = divergence_flat(phi, x, 0.5, {tight, loose});
        const double sharp = divergence_sharp(phi, x, 0.5, {tight, loose});
        const double mid = pointwise_divergence(phi, tight, x, 0.5);
        CHECK(flat <= mid);
        CHECK(mid <= sharp);
    }
    CHECK_THROWS_AS(divergence_flat(phi, 0.0, 0.5, {}), std::invalid_argument);
    CHECK_THROWS_AS(divergence_sharp(phi, 0.0, 0.5, {}), std::invalid_argument);
}

TEST_CASE("triangle identity") {
    const BregmanGenerator gen = example_generator();
    const TriangleResidual same = triangle_residual(gen, 0.5, 0.5, 0.5);
    CHECK(same.lhs == 0.0);
    CHECK(same.rhs == 0.0);

    const TriangleResidual t = triangle_residual(gen, 1.0, 0.5, 2.0);
    CHECK(t.lhs == -1.5);
    CHECK(t.rhs == -1.5);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        double a = U(rng), b = U(rng);
        const double c = U(rng);
        while (std::abs(a) < 1e-3) a = U(rng);
        while (std::abs(b) < 1e-3) b = U(rng);
        const TriangleResidual r = triangle_residual(gen, a, b, c);
        REQUIRE(std::abs(r.lhs - r.rhs) <= 1e-12 * (1.0 + std::abs(r.lhs)));
    }
    CHECK_THROWS_AS(triangle_residual(gen, 0.0, 0.5, 1.0), DegeneratePointError);
}

TEST_CASE("projection onto constraint sets") {
    const BregmanGenerator gen = example_generator();
    const Domain dom(-5.0, 5.0);

    const FeasibleSet band{[](double z) { return z >= 1.0 && z <= 2.0; }, dom};
    const std::vector<double> p1 = project(gen, band, 0.5);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == 1.0);
    CHECK(divergence(gen, p1[0], 0.5) == 0.25);

    // a feasible base point projects onto itself
    const std::vector<double> p2 = project(gen, band, 1.5);
    bool has_y = false;
    for (double m : p2) {
        if (std::abs(m - 1.5) <= 1e-9) has_y = true;
    }
    CHECK(has_y);

    const FeasibleSet two_bands{
        [](double z) { return (z >= 1.0 && z <= 2.0) || (z >= -2.0 && z <= -1.0); }, dom};
    const std::vector<double> p3 = project(gen, two_bands, 0.5);
    REQUIRE(p3.size() == 2);
    CHECK(p3[0] == -1.0);
    CHECK(p3[1] == 1.0);

    const FeasibleSet never{[](double) { return false; }, dom};
    CHECK_THROWS_AS(project(gen, never, 0.5), InfeasibleError);
    CHECK_THROWS_AS(project(gen, band, 0.0), DegeneratePointError);
}

TEST_CASE("generic generator selection matches phi's subdifferential") {
    const BregmanGenerator gen = make_generator(example_phi());
    const auto lam = gen.lambda_of(0.5);
    REQUIRE(lam.has_value());
    CHECK(lam->a == -1.0);
    CHECK(lam->b == 0.0);
    CHECK(!gen.lambda_of(0.0).has_value());
}
