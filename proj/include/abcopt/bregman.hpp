#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "abcopt/functions.hpp"
#include "abcopt/lspace.hpp"
#include "abcopt/solver1d.hpp"

namespace abcopt {

/// A generator for abstract Bregman divergences: the function phi together
/// with a rule selecting one subgradient lambda from its subdifferential at
/// each base point. lambda_of returns nullopt exactly where the
/// subdifferential is empty.
struct BregmanGenerator {
    ObjectiveOracle phi;
    std::function<std::optional<LFunc>(double)> lambda_of;
};

/// Generator whose selection rule takes the canonical representative of
/// phi's subdifferential at each point (with zero offset).
BregmanGenerator make_generator(const ObjectiveOracle& phi);

/// Generator for the shipped example phi(x) = -|x|.
BregmanGenerator example_generator(
    const Domain& dom = Domain(kDefaultDomainLo, kDefaultDomainHi));

/// phi(x) - phi(y) - (lambda(x) - lambda(y)) for an arbitrary L-element.
/// This is the raw divergence expression; it is a genuine divergence only
/// when lambda is a subgradient of phi at y.
double pointwise_divergence(const ObjectiveOracle& phi, const LFunc& lambda, double x, double y);

/// The divergence induced by the generator's selection at y. Throws
/// DegeneratePointError where the generator is undefined and
/// std::invalid_argument when x or y leaves the domain.
double divergence(const BregmanGenerator& gen, double x, double y);

/// Infimum (flat) / supremum (sharp) of the pointwise divergence over an
/// explicit set of subgradient samples taken at the base point y. The base
/// point is the second argument for both variants, which makes
/// flat <= pointwise <= sharp hold for every sampled lambda.
double divergence_flat(const ObjectiveOracle& phi, double x, double y,
                       const std::vector<LFunc>& samples);
double divergence_sharp(const ObjectiveOracle& phi, double x, double y,
                        const std::vector<LFunc>& samples);

struct TriangleResidual {
    double lhs;
    double rhs;
};

/// Both sides of the three-point divergence identity
///   D^alpha(c,a) + D^beta(a,b) - D^beta(c,b) = beta(c)-beta(a)-(alpha(c)-alpha(a))
/// with alpha, beta the generator's selections at a and b.
TriangleResidual triangle_residual(const BregmanGenerator& gen, double a, double b, double c);

/// A constraint set given as a membership predicate over a search interval.
struct FeasibleSet {
    std::function<bool(double)> contains;
    Domain dom;
};

/// Bregman projection of y onto C: all near-minimisers of z -> D(z, y) over
/// the feasible set, within the solver's value tolerance. If y itself is
/// feasible it is always part of the result.
std::vector<double> project(const BregmanGenerator& gen, const FeasibleSet& C, double y,
                            const SolverConfig& cfg = {});

}  // namespace abcopt
