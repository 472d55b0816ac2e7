#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abcopt/lspace.hpp"

namespace abcopt {

/// Closed bounded interval of the real line on which all computation lives.
struct Domain {
    double lo;
    double hi;

    Domain(double lo_, double hi_);

    bool contains(double x) const { return x >= lo && x <= hi; }
    double width() const { return hi - lo; }

    friend bool operator==(const Domain&, const Domain&) = default;
};

/// A subdifferential w.r.t. L described as an interval of curvature
/// coefficients (offsets are canonically zero: they cancel in every
/// subgradient inequality). Either bound may be infinite.
struct SubdiffSet {
    enum class Kind { Empty, Interval };

    Kind kind = Kind::Empty;
    double a_lo = 0.0;
    double a_hi = 0.0;

    static SubdiffSet empty() { return {}; }
    static SubdiffSet singleton(double a) { return interval(a, a); }
    static SubdiffSet interval(double lo, double hi);

    bool is_empty() const { return kind == Kind::Empty; }
    bool is_singleton() const { return kind == Kind::Interval && a_lo == a_hi; }
    bool contains(double a, double tol = 0.0) const {
        return kind == Kind::Interval && a >= a_lo - tol && a <= a_hi + tol;
    }
};

/// A scalar objective on a domain: evaluation (may return +inf outside the
/// domain) together with its L-subdifferential at each point.
struct ObjectiveOracle {
    std::function<double(double)> eval;
    std::function<SubdiffSet(double)> subdiff;
    Domain domain;
};

inline constexpr double kDefaultDomainLo = -5.0;
inline constexpr double kDefaultDomainHi = 5.0;

/// Points closer than this to a kink (or to 0) are classified as the kink
/// itself when evaluating subdifferentials; keeps refined minimisers that
/// land on a kink numerically on the kink.
inline constexpr double kKinkTol = 1e-8;

// Shipped fixtures. All are even functions of x.
ObjectiveOracle example_f(const Domain& dom = Domain(kDefaultDomainLo, kDefaultDomainHi));
ObjectiveOracle example_phi(const Domain& dom = Domain(kDefaultDomainLo, kDefaultDomainHi));

/// The three summands of example_f as standalone oracles, for exercising
/// sum_oracle against the combined fixture.
std::vector<ObjectiveOracle> example_f_parts(
    const Domain& dom = Domain(kDefaultDomainLo, kDefaultDomainHi));

/// Pointwise sum of oracles; subdifferentials combine by Minkowski sum of
/// coefficient intervals (empty as soon as one part is empty). The sum rule
/// is heuristic for abstract subdifferentials, so callers should validate
/// the result with check_subgradient on their own grids.
ObjectiveOracle sum_oracle(const std::vector<ObjectiveOracle>& parts);

/// Grid test of the subgradient inequality f(y) >= f(x) + l(y) - l(x) - tol
/// over a uniform grid on the oracle's domain.
bool check_subgradient(const ObjectiveOracle& f, double x, const LFunc& l,
                       int grid_points = 2001, double tol = 1e-9);

struct StrictnessResult {
    bool strict = true;
    double witness = 0.0;  // meaningful only when !strict
};

/// Scans a uniform grid for a point y != x where the minorant inequality
/// f(y) >= f(x) + u(y) - u(x) holds with equality (within tol). Witnesses
/// must be at least a grid step away from x. Throws std::invalid_argument
/// if the inequality is violated outright somewhere (u is then not a
/// minorant shift at x).
StrictnessResult check_strictness(const std::function<double(double)>& f_eval, double x,
                                  const std::function<double(double)>& u_eval,
                                  const Domain& dom = Domain(kDefaultDomainLo, kDefaultDomainHi),
                                  int grid_points = 2001, double tol = 1e-7);

/// Deterministic selection of one coefficient from a subdifferential set.
/// When `preferred` lies inside the interval it is returned unchanged;
/// otherwise the midpoint (finite interval) or the finite endpoint
/// (half-infinite interval). Throws DegeneratePointError on an empty set.
double select_coefficient(const SubdiffSet& set, std::optional<double> preferred = std::nullopt);

}  // namespace abcopt
