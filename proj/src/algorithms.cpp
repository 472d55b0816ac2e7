#include "abcopt/algorithms.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "abcopt/errors.hpp"

namespace abcopt {

Schedule Schedule::harmonic() { return {}; }

Schedule Schedule::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("Schedule: constant step must be positive and finite");
    }
    Schedule s;
    s.kind = Kind::Constant;
    s.c = c;
    return s;
}

Schedule Schedule::explicit_list(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("Schedule: empty explicit list");
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("Schedule: explicit steps must be positive and finite");
        }
    }
    Schedule s;
    s.kind = Kind::Explicit;
    s.values = std::move(values);
    return s;
}

std::optional<double> Schedule::c_at(int k) const {
    if (k < 1) throw std::invalid_argument("Schedule: step index starts at 1");
    switch (kind) {
        case Kind::Harmonic:
            return 1.0 / k;
        case Kind::Constant:
            return c;
        case Kind::Explicit:
            if (k > static_cast<int>(values.size())) return std::nullopt;
            return values[static_cast<size_t>(k) - 1];
    }
    return std::nullopt;
}

namespace {

/// Subgradient selection at the new iterate. Prefers the interval element
/// that lands the lambda update exactly on the generator's selection there,
/// so kink iterates do not derail the running lambda.
LFunc pick_subgradient(const ObjectiveOracle& f, const BregmanGenerator& gen, double x_next,
                       const LFunc& lambda_k, double c_k) {
    const SubdiffSet s = f.subdiff(x_next);
    if (s.is_empty()) {
        throw DegeneratePointError("empty subdifferential of the objective at x=" +
                                   std::to_string(x_next));
    }
    std::optional<double> preferred;
    if (const auto phi_sel = gen.lambda_of(x_next)) {
        preferred = (lambda_k.a - phi_sel->a) / c_k;
    }
    return {select_coefficient(s, preferred), 0.0};
}

bool contains_zero(const SubdiffSet& s, double tol) {
    return !s.is_empty() && s.a_lo <= tol && s.a_hi >= -tol;
}

std::string drift_warning(int k, double gap) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "k=%d: lambda update drifted %.3e from the generator selection", k, gap);
    return buf;
}

/// Drift of the running lambda from the generator's selection at x, or
/// nullopt where the generator is undefined.
std::optional<double> lambda_gap(const BregmanGenerator& gen, const LFunc& lambda, double x) {
    const auto sel = gen.lambda_of(x);
    if (!sel) return std::nullopt;
    return std::abs(lambda.a - sel->a);
}

}  // namespace

ProxStep prox_step(const ObjectiveOracle& f, const BregmanGenerator& gen, double x_k,
                   const LFunc& lambda_k, double c_k, const SolverConfig& cfg, LambdaMode mode,
                   TieBreak tiebreak) {
    if (!(c_k > 0.0)) throw std::invalid_argument("prox_step: c_k must be positive");
    if (!f.domain.contains(x_k)) throw std::invalid_argument("prox_step: x_k outside domain");
    const double inv_c = 1.0 / c_k;
    auto obj = [&](double x) {
        return f.eval(x) + inv_c * pointwise_divergence(gen.phi, lambda_k, x, x_k);
    };
    const MinimizeResult res = minimize_scalar(obj, f.domain, cfg);
    const double x_next = argmin_tiebreak(res.minimizers, tiebreak);

    const double f_prev = f.eval(x_k);
    const double f_next = f.eval(x_next);
    if (f_next > f_prev + 1e-9) {
        throw std::runtime_error("prox_step: objective increased (invalid lambda_k?)");
    }

    const LFunc g = pick_subgradient(f, gen, x_next, lambda_k, c_k);
    LFunc lambda_next;
    if (mode == LambdaMode::PaperUpdate) {
        lambda_next = lambda_k - scale(g, c_k);
    } else {
        const auto sel = gen.lambda_of(x_next);
        if (!sel) {
            throw DegeneratePointError("generator undefined at new iterate x=" +
                                       std::to_string(x_next));
        }
        lambda_next = *sel;
    }
    const double step_div = pointwise_divergence(gen.phi, lambda_k, x_next, x_k);
    return {x_next, lambda_next, g, step_div, res.value};
}

MirrorStep mirror_step(const ObjectiveOracle& f, const BregmanGenerator& gen, double x_k,
                       const LFunc& lambda_k, double c_k, const SolverConfig& cfg, LambdaMode mode,
                       TieBreak tiebreak) {
    if (!(c_k > 0.0)) throw std::invalid_argument("mirror_step: c_k must be positive");
    if (!f.domain.contains(x_k)) throw std::invalid_argument("mirror_step: x_k outside domain");
    const SubdiffSet s = f.subdiff(x_k);
    if (s.is_empty()) {
        throw DegeneratePointError("empty subdifferential of the objective at x=" +
                                   std::to_string(x_k));
    }
    const LFunc u{select_coefficient(s), 0.0};
    const double inv_c = 1.0 / c_k;
    auto obj = [&](double x) {
        return eval(u, x) + inv_c * pointwise_divergence(gen.phi, lambda_k, x, x_k);
    };
    const MinimizeResult res = minimize_scalar(obj, f.domain, cfg);
    const double x_next = argmin_tiebreak(res.minimizers, tiebreak);

    LFunc lambda_next;
    if (mode == LambdaMode::Refresh) {
        const auto sel = gen.lambda_of(x_next);
        if (!sel) {
            throw DegeneratePointError("generator undefined at new iterate x=" +
                                       std::to_string(x_next));
        }
        lambda_next = *sel;
    } else {
        lambda_next = lambda_k - scale(u, c_k);
    }
    const double step_div = pointwise_divergence(gen.phi, lambda_k, x_next, x_k);
    return {x_next, lambda_next, u, step_div, res.value};
}

namespace {

enum class Method { Prox, Mirror };

Trace run_loop(Method method, const ObjectiveOracle& f, const BregmanGenerator& gen, double x0,
               const Schedule& sched, const StopRule& stop, const SolverConfig& cfg,
               LambdaMode mode, TieBreak tiebreak) {
    if (stop.max_iters < 1) throw std::invalid_argument("StopRule: max_iters must be >= 1");
    if (!f.domain.contains(x0)) throw std::invalid_argument("x0 outside domain");
    const auto lam0 = gen.lambda_of(x0);
    if (!lam0) {
        throw DegeneratePointError("generator undefined at x0=" + std::to_string(x0) +
                                   " (empty subdifferential of phi)");
    }
    Trace tr;
    double xk = x0;
    LFunc lamk = *lam0;
    tr.records.push_back({0, xk, f.eval(xk), lamk, 0.0, 0.0, 0.0});
    for (int k = 1;; ++k) {
        if (contains_zero(f.subdiff(xk), stop.zero_subgrad_tol)) {
            tr.reason = StopReason::ZeroSubgradient;
            break;
        }
        if (k > stop.max_iters) {
            tr.reason = StopReason::MaxIters;
            break;
        }
        const auto c = sched.c_at(k);
        if (!c) {
            tr.reason = StopReason::ScheduleExhausted;
            break;
        }
        double x_next, step_div, sub_value;
        LFunc lambda_next;
        if (method == Method::Prox) {
            const ProxStep st = prox_step(f, gen, xk, lamk, *c, cfg, mode, tiebreak);
            x_next = st.x_next;
            lambda_next = st.lambda_next;
            step_div = st.step_div;
            sub_value = st.subproblem_value;
        } else {
            const MirrorStep st = mirror_step(f, gen, xk, lamk, *c, cfg, mode, tiebreak);
            x_next = st.x_next;
            lambda_next = st.lambda_next;
            step_div = st.step_div;
            sub_value = st.subproblem_value;
        }
        const double f_prev = tr.records.back().f_x;
        const double f_next = f.eval(x_next);
        tr.records.push_back({k, x_next, f_next, lambda_next, *c, step_div, sub_value});
        if (mode == LambdaMode::PaperUpdate) {
            if (const auto gap = lambda_gap(gen, lambda_next, x_next); gap && *gap > 1e-3) {
                tr.warnings.push_back(drift_warning(k, *gap));
            }
        }
        xk = x_next;
        lamk = lambda_next;
        if (std::abs(f_next - f_prev) <= stop.f_tol) {
            tr.reason = StopReason::FTol;
            break;
        }
    }
    return tr;
}

}  // namespace

Trace prox_run(const ObjectiveOracle& f, const BregmanGenerator& gen, double x0,
               const Schedule& sched, const StopRule& stop, const SolverConfig& cfg,
               LambdaMode mode, TieBreak tiebreak) {
    return run_loop(Method::Prox, f, gen, x0, sched, stop, cfg, mode, tiebreak);
}

Trace mirror_run(const ObjectiveOracle& f, const BregmanGenerator& gen, double x0,
                 const Schedule& sched, const StopRule& stop, const SolverConfig& cfg,
                 LambdaMode mode, TieBreak tiebreak) {
    return run_loop(Method::Mirror, f, gen, x0, sched, stop, cfg, mode, tiebreak);
}

BestValue best_value(const Trace& trace) {
    if (trace.records.empty()) throw std::invalid_argument("best_value: empty trace");
    BestValue best{trace.records.front().k, trace.records.front().f_x};
    for (const IterateRecord& r : trace.records) {
        if (r.f_x < best.f) best = {r.k, r.f_x};
    }
    return best;
}

AssumptionReport check_assumptions(const BregmanGenerator& gen, double x0, const Domain& probe,
                                   const std::vector<double>& levels,
                                   const std::vector<double>& candidates) {
    if (!gen.phi.domain.contains(probe.lo) || !gen.phi.domain.contains(probe.hi)) {
        throw std::invalid_argument("check_assumptions: probe exceeds the generator domain");
    }
    const auto lam = gen.lambda_of(x0);
    if (!lam) {
        throw DegeneratePointError("generator undefined at x0=" + std::to_string(x0));
    }
    AssumptionReport rep;
    const double d_lo = pointwise_divergence(gen.phi, *lam, probe.lo, x0);
    const double d_hi = pointwise_divergence(gen.phi, *lam, probe.hi, x0);
    for (double alpha : levels) {
        const bool touches = d_lo <= alpha || d_hi <= alpha;
        rep.levels.push_back({alpha, !touches});
    }
    for (double x : candidates) {
        const double d = pointwise_divergence(gen.phi, *lam, x, x0);
        rep.candidates.push_back({x, d, std::isfinite(d)});
    }
    return rep;
}

}  // namespace abcopt
