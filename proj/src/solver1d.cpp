#include "abcopt/solver1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "abcopt/errors.hpp"

namespace abcopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
    double x;
    double value;
};

/// Golden-section search on [a, b], derivative-free. Returns the best point
/// seen over all probes (including both bracket ends), which makes boundary
/// minima land exactly on the bracket end instead of refine_tol short of it.
Candidate golden_refine(const std::function<double(double)>& obj, double a, double b,
                        const SolverConfig& cfg) {
    static const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    Candidate best{a, obj(a)};
    auto consider = [&best](double x, double v) {
        if (v < best.value) best = {x, v};
    };
    consider(b, obj(b));
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = obj(x1);
    double f2 = obj(x2);
    consider(x1, f1);
    consider(x2, f2);
    for (int it = 0; it < cfg.max_refine_iters && (b - a) > cfg.refine_tol; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = obj(x1);
            consider(x1, f1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = obj(x2);
            consider(x2, f2);
        }
    }
    return best;
}

}  // namespace

MinimizeResult minimize_scalar(const std::function<double(double)>& obj, const Domain& dom,
                               const SolverConfig& cfg) {
    if (cfg.grid_points < 3) throw std::invalid_argument("minimize_scalar: grid_points < 3");
    if (!(cfg.refine_tol > 0.0) || !(cfg.value_tol > 0.0)) {
        throw std::invalid_argument("minimize_scalar: tolerances must be positive");
    }
    const int n = cfg.grid_points;
    const double step = dom.width() / (n - 1);
    std::vector<double> xs(n), vs(n);
    double grid_min = kInf;
    for (int i = 0; i < n; ++i) {
        xs[i] = i == n - 1 ? dom.hi : dom.lo + i * step;
        vs[i] = obj(xs[i]);
        if (vs[i] < grid_min) grid_min = vs[i];
    }
    if (!std::isfinite(grid_min)) {
        throw InfeasibleError("minimize_scalar: objective is +inf on the whole grid");
    }

    // Basin seeds: grid-local minima tying the global grid minimum. Interior
    // points of flat runs are skipped so plateaus contribute their two edges.
    std::vector<int> basins;
    for (int i = 0; i < n; ++i) {
        if (!std::isfinite(vs[i])) continue;
        const double left = i > 0 ? vs[i - 1] : kInf;
        const double right = i < n - 1 ? vs[i + 1] : kInf;
        if (vs[i] > left || vs[i] > right) continue;
        if (vs[i] == left && vs[i] == right) continue;
        if (vs[i] <= grid_min + cfg.value_tol) basins.push_back(i);
    }

    std::vector<Candidate> cands;
    for (int i : basins) {
        const double a = i > 0 ? xs[i - 1] : xs[i];
        const double b = i < n - 1 ? xs[i + 1] : xs[i];
        Candidate c = a < b ? golden_refine(obj, a, b, cfg) : Candidate{xs[i], vs[i]};
        if (vs[i] < c.value) c = {xs[i], vs[i]};
        cands.push_back(c);
    }

    double best = kInf;
    for (const Candidate& c : cands) best = std::min(best, c.value);

    std::vector<double> mins;
    for (const Candidate& c : cands) {
        if (c.value <= best + cfg.value_tol) mins.push_back(c.x);
    }
    std::sort(mins.begin(), mins.end());
    std::vector<double> out;
    for (double x : mins) {
        if (out.empty() || x - out.back() > 2.0 * cfg.refine_tol) out.push_back(x);
    }
    return {out, best};
}

double argmin_tiebreak(const std::vector<double>& minimizers, TieBreak rule) {
    if (minimizers.empty()) throw std::invalid_argument("argmin_tiebreak: empty candidate list");
    auto smaller_abs = [](double x, double y) {
        const double ax = std::abs(x), ay = std::abs(y);
        if (ax != ay) return ax < ay;
        return x > y;  // |.|-tie goes to the positive candidate
    };
    switch (rule) {
        case TieBreak::SmallestAbs:
            return *std::min_element(minimizers.begin(), minimizers.end(), smaller_abs);
        case TieBreak::MostNegative:
            return *std::min_element(minimizers.begin(), minimizers.end());
        case TieBreak::Positive: {
            std::vector<double> pos;
            for (double x : minimizers) {
                if (x > 0.0) pos.push_back(x);
            }
            const std::vector<double>& pool = pos.empty() ? minimizers : pos;
            return *std::min_element(pool.begin(), pool.end(), smaller_abs);
        }
    }
    throw std::logic_error("argmin_tiebreak: unknown rule");
}

}  // namespace abcopt
