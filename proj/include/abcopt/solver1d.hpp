#pragma once

#include <functional>
#include <vector>

#include "abcopt/functions.hpp"

namespace abcopt {

struct SolverConfig {
    int grid_points = 100001;      // uniform scan resolution
    double refine_tol = 1e-10;     // bracket width target for refinement (on x)
    double value_tol = 1e-9;       // near-minimiser equivalence on objective values
    int max_refine_iters = 200;
};

struct MinimizeResult {
    std::vector<double> minimizers;  // all near-optimal points, ascending
    double value = 0.0;              // best refined objective value
};

/// Deterministic global minimisation of an arbitrary scalar objective over a
/// bounded interval. Scans a uniform grid, collects every local basin whose
/// grid value ties the global grid minimum within value_tol, refines each
/// basin by golden-section search, and returns all refined minimisers within
/// value_tol of the best. +inf objective values mark excluded points.
/// Throws InfeasibleError when the objective is +inf on the whole grid.
MinimizeResult minimize_scalar(const std::function<double(double)>& obj, const Domain& dom,
                               const SolverConfig& cfg = {});

enum class TieBreak { SmallestAbs, MostNegative, Positive };

/// Deterministic pick from a set of equivalent minimisers. SmallestAbs
/// breaks |.|-ties toward the positive candidate; Positive prefers positive
/// candidates (then smallest magnitude); MostNegative takes the minimum.
double argmin_tiebreak(const std::vector<double>& minimizers, TieBreak rule);

}  // namespace abcopt
