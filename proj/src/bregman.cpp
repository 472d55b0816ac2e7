#include "abcopt/bregman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "abcopt/errors.hpp"

namespace abcopt {

BregmanGenerator make_generator(const ObjectiveOracle& phi) {
    auto lam = [sd = phi.subdiff](double y) -> std::optional<LFunc> {
        const SubdiffSet s = sd(y);
        if (s.is_empty()) return std::nullopt;
        return LFunc{select_coefficient(s), 0.0};
    };
    return {phi, lam};
}

BregmanGenerator example_generator(const Domain& dom) { return make_generator(example_phi(dom)); }

double pointwise_divergence(const ObjectiveOracle& phi, const LFunc& lambda, double x, double y) {
    return phi.eval(x) - phi.eval(y) - (eval(lambda, x) - eval(lambda, y));
}

namespace {

LFunc require_lambda(const BregmanGenerator& gen, double y) {
    const auto lam = gen.lambda_of(y);
    if (!lam) {
        throw DegeneratePointError("generator undefined at y=" + std::to_string(y) +
                                   " (empty subdifferential of phi)");
    }
    return *lam;
}

}  // namespace

double divergence(const BregmanGenerator& gen, double x, double y) {
    if (!gen.phi.domain.contains(x) || !gen.phi.domain.contains(y)) {
        throw std::invalid_argument("divergence: point outside domain");
    }
    return pointwise_divergence(gen.phi, require_lambda(gen, y), x, y);
}

double divergence_flat(const ObjectiveOracle& phi, double x, double y,
                       const std::vector<LFunc>& samples) {
    if (samples.empty()) throw std::invalid_argument("divergence_flat: no samples");
    double best = std::numeric_limits<double>::infinity();
    for (const LFunc& l : samples) best = std::min(best, pointwise_divergence(phi, l, x, y));
    return best;
}

double divergence_sharp(const ObjectiveOracle& phi, double x, double y,
                        const std::vector<LFunc>& samples) {
    if (samples.empty()) throw std::invalid_argument("divergence_sharp: no samples");
    double best = -std::numeric_limits<double>::infinity();
    for (const LFunc& l : samples) best = std::max(best, pointwise_divergence(phi, l, x, y));
    return best;
}

TriangleResidual triangle_residual(const BregmanGenerator& gen, double a, double b, double c) {
    const LFunc alpha = require_lambda(gen, a);
    const LFunc beta = require_lambda(gen, b);
    const double lhs = pointwise_divergence(gen.phi, alpha, c, a) +
                       pointwise_divergence(gen.phi, beta, a, b) -
                       pointwise_divergence(gen.phi, beta, c, b);
    const double rhs = eval(beta, c) - eval(beta, a) - (eval(alpha, c) - eval(alpha, a));
    return {lhs, rhs};
}

std::vector<double> project(const BregmanGenerator& gen, const FeasibleSet& C, double y,
                            const SolverConfig& cfg) {
    const LFunc lam = require_lambda(gen, y);
    auto obj = [&](double z) -> double {
        if (!C.contains(z)) return std::numeric_limits<double>::infinity();
        return pointwise_divergence(gen.phi, lam, z, y);
    };
    MinimizeResult res;
    try {
        res = minimize_scalar(obj, C.dom, cfg);
    } catch (const InfeasibleError&) {
        throw InfeasibleError("project: constraint set is empty on the grid");
    }
    // D(y,y) = 0 is the global optimum of a valid divergence, so a feasible
    // base point always belongs to the projection.
    if (C.dom.contains(y) && C.contains(y)) {
        const double dy = obj(y);
        if (dy <= res.value + cfg.value_tol) {
            bool present = false;
            for (double m : res.minimizers) {
                if (std::abs(m - y) <= 2.0 * cfg.refine_tol) present = true;
            }
            if (!present) res.minimizers.push_back(y);
            std::sort(res.minimizers.begin(), res.minimizers.end());
        }
    }
    return res.minimizers;
}

}  // namespace abcopt
