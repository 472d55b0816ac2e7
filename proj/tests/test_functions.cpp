#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "abcopt/errors.hpp"
#include "abcopt/functions.hpp"

using namespace abcopt;

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(Domain(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Domain(2.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(Domain(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    const Domain d(-5.0, 5.0);
    CHECK(d.contains(0.0));
    CHECK(!d.contains(5.0001));
}

TEST_CASE("subdiff set shapes") {
    CHECK(SubdiffSet::empty().is_empty());
    CHECK(SubdiffSet::singleton(2.0).is_singleton());
    const SubdiffSet s = SubdiffSet::interval(-4.5, -2.5);
    CHECK(s.contains(-3.0));
    CHECK(!s.contains(-2.0));
    CHECK(s.contains(-2.4999, 1e-3));
    CHECK_THROWS_AS(SubdiffSet::interval(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("example objective evaluation") {
    const ObjectiveOracle f = example_f();
    CHECK(f.eval(0.25) == 0.94140625);
    CHECK(f.eval(1.75) == 3.81640625);
    CHECK(f.eval(5.0) == 591.0);
    CHECK(f.eval(1.0) == -1.0);
    CHECK(f.eval(-1.0) == -1.0);
    CHECK(std::isinf(f.eval(5.5)));
}

TEST_CASE("example objective subdifferential") {
    const ObjectiveOracle f = example_f();
    CHECK(f.subdiff(0.0).is_empty());
    const SubdiffSet inner = f.subdiff(0.25);
    CHECK(inner.is_singleton());
    CHECK(inner.a_lo == -8.875);
    const SubdiffSet kink = f.subdiff(0.5);
    CHECK(kink.a_lo == doctest::Approx(-4.5).epsilon(1e-12));
    CHECK(kink.a_hi == doctest::Approx(-2.5).epsilon(1e-12));
    const SubdiffSet at_min = f.subdiff(1.0);
    CHECK(at_min.is_singleton());
    CHECK(at_min.a_lo == 0.0);
    // points within the kink window are classified as the kink
    CHECK(!f.subdiff(0.5 + 1e-10).is_singleton());
    CHECK(f.subdiff(1e-10).is_empty());
}

TEST_CASE("generator fixture phi") {
    const ObjectiveOracle phi = example_phi();
    CHECK(phi.eval(0.5) == -0.5);
    const SubdiffSet s = phi.subdiff(0.5);
    CHECK(s.is_singleton());
    CHECK(s.a_lo == -1.0);
    CHECK(phi.subdiff(0.0).is_empty());
}

TEST_CASE("sum oracle") {
    const ObjectiveOracle f = example_f();
    const ObjectiveOracle fsum = sum_oracle(example_f_parts());
    CHECK(fsum.eval(0.25) == 0.94140625);
    const int n = 501;
    for (int i = 0; i < n; ++i) {
        const double x = -5.0 + 10.0 * i / (n - 1);
        CHECK(fsum.eval(x) == f.eval(x));
    }
    const SubdiffSet at1 = fsum.subdiff(1.0);
    CHECK(at1.contains(0.0));
    CHECK(check_subgradient(f, 1.0, LFunc{0.0, 0.0}, 10001, 1e-9));

    const ObjectiveOracle single = sum_oracle({f});
    CHECK(single.eval(1.25) == f.eval(1.25));
    CHECK(single.subdiff(1.25).a_lo == f.subdiff(1.25).a_lo);

    const ObjectiveOracle other = example_f(Domain(-4.0, 4.0));
    CHECK_THROWS_AS(sum_oracle({f, other}), std::invalid_argument);
}

TEST_CASE("subgradient grid check") {
    const ObjectiveOracle f = example_f();
    CHECK(check_subgradient(f, 1.0, LFunc{0.0, 0.0}));
    CHECK(check_subgradient(f, 0.25, LFunc{-8.875, 0.0}));
    CHECK(!check_subgradient(f, 1.0, LFunc{5.0, 0.0}));  // violated at y=2
    CHECK_THROWS_AS(check_subgradient(f, 6.0, LFunc{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("interval endpoints are grid-verified subgradients for all fixtures") {
    std::vector<ObjectiveOracle> oracles = example_f_parts();
    oracles.push_back(example_f());
    oracles.push_back(example_phi());
    const int n = 2001;
    for (const ObjectiveOracle& f : oracles) {
        const double step = f.domain.width() / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = f.domain.lo + i * step;
            const SubdiffSet s = f.subdiff(x);
            if (s.is_empty()) continue;
            const double lo = std::isinf(s.a_lo) ? -1e6 : s.a_lo;
            const double hi = std::isinf(s.a_hi) ? 1e6 : s.a_hi;
            REQUIRE(check_subgradient(f, x, LFunc{lo, 0.0}, n, 1e-9));
            REQUIRE(check_subgradient(f, x, LFunc{hi, 0.0}, n, 1e-9));
        }
    }
}

TEST_CASE("example objective is even on the grid") {
    const ObjectiveOracle f = example_f();
    const int n = 2001;
    const double step = f.domain.width() / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double x = f.domain.lo + i * step;
        REQUIRE(std::abs(f.eval(x) - f.eval(-x)) <= 1e-12);
    }
}

namespace {
double sq(double z) { return z * z; }
double quasi_pos(double z) { return sq(std::max(0.0, z)); }
double quasi_neg(double z) { return sq(std::min(0.0, z)); }
double linear2(double z) { return 2.0 * z; }
}  // namespace

TEST_CASE("strictness checker fixtures") {
    const StrictnessResult r1 = check_strictness(sq, 1.0, quasi_pos);
    CHECK(!r1.strict);
    CHECK(r1.witness >= 0.0);  // the minorant touches on the whole ray y >= 0
    CHECK(r1.witness != 1.0);

    const StrictnessResult r2 = check_strictness(sq, 1.0, linear2);
    CHECK(r2.strict);

    const StrictnessResult r3 = check_strictness(sq, 0.0, quasi_neg);
    CHECK(!r3.strict);
    CHECK(r3.witness < 0.0);

    // not a minorant shift at all
    CHECK_THROWS_AS(check_strictness(sq, 1.0, [](double z) { return 3.0 * z * z; }),
                    std::invalid_argument);
}

TEST_CASE("generator minorants touch only at the reflected point") {
    // For phi = -|x| at x != 0, the selected subgradient's equality set is
    // exactly {x, -x}; the strictness scan must report the reflection as the
    // only witness.
    const ObjectiveOracle phi = example_phi();
    for (double x : {0.7, 1.6, -2.3}) {
        const double a = -1.0 / (2.0 * std::abs(x));
        const StrictnessResult r = check_strictness(
            phi.eval, x, [a](double z) { return a * z * z; });
        REQUIRE(!r.strict);
        CHECK(std::abs(r.witness + x) <= 1e-2);
    }
}

TEST_CASE("sum oracle rejects an empty part list") {
    CHECK_THROWS_AS(sum_oracle({}), std::invalid_argument);
}

TEST_CASE("coefficient selection") {
    CHECK(select_coefficient(SubdiffSet::singleton(-2.0)) == -2.0);
    const SubdiffSet iv = SubdiffSet::interval(-4.5, -2.5);
    CHECK(select_coefficient(iv, -3.7) == -3.7);
    CHECK(select_coefficient(iv, -9.0) == -3.5);
    CHECK(select_coefficient(iv) == -3.5);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(select_coefficient(SubdiffSet::interval(-inf, -1.0)) == -1.0);
    CHECK(select_coefficient(SubdiffSet::interval(-inf, -1.0), -2.5) == -2.5);
    CHECK(select_coefficient(SubdiffSet::interval(2.0, inf)) == 2.0);
    CHECK_THROWS_AS(select_coefficient(SubdiffSet::empty()), DegeneratePointError);
}
