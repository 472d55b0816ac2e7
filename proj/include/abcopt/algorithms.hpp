#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcopt/bregman.hpp"
#include "abcopt/functions.hpp"
#include "abcopt/lspace.hpp"
#include "abcopt/solver1d.hpp"

namespace abcopt {

/// Step-size schedule c_k (k >= 1). Harmonic and Constant have divergent
/// sums; an Explicit schedule ends the run when its list is exhausted.
struct Schedule {
    enum class Kind { Harmonic, Constant, Explicit };

    Kind kind = Kind::Harmonic;
    double c = 1.0;
    std::vector<double> values;

    static Schedule harmonic();
    static Schedule constant(double c);
    static Schedule explicit_list(std::vector<double> values);

    std::optional<double> c_at(int k) const;
    bool divergent_sum() const { return kind != Kind::Explicit; }
};

struct StopRule {
    int max_iters = 50;             // maximum number of steps
    double f_tol = 1e-9;            // stop when |f(x_{k+1}) - f(x_k)| <= f_tol
    double zero_subgrad_tol = 1e-6; // stop when 0 sits in the subdifferential interval
};

/// How the running lambda is maintained. PaperUpdate applies the literal
/// update lambda_{k+1} = lambda_k - c_k * (sub)gradient; Refresh re-selects
/// lambda_{k+1} from the generator's subdifferential at the new iterate.
/// Both coincide whenever the subproblem solution is interior and smooth.
enum class LambdaMode { PaperUpdate, Refresh };

struct IterateRecord {
    int k = 0;
    double x = 0.0;
    double f_x = 0.0;
    LFunc lambda;            // running lambda paired with this iterate
    double c_k = 0.0;        // step size of the step that produced it (0 for k=0)
    double step_div = 0.0;   // divergence of that step, D^{lambda_k}(x_{k+1}, x_k)
    double subproblem_value = 0.0;  // minimised subproblem objective (0 for k=0)
};

enum class StopReason { ZeroSubgradient, FTol, MaxIters, ScheduleExhausted };

struct Trace {
    std::vector<IterateRecord> records;
    StopReason reason = StopReason::MaxIters;
    std::vector<std::string> warnings;  // lambda-consistency drift notes
};

struct ProxStep {
    double x_next;
    LFunc lambda_next;
    LFunc g;  // selected subgradient of f at x_next
    double step_div;
    double subproblem_value;
};

/// One proximal step: minimise f(x) + (1/c_k) D^{lambda_k}(x, x_k), pick the
/// new subgradient g (preferring the element that keeps the lambda update on
/// the generator's selection), and update lambda per the mode. Enforces the
/// monotone-descent contract f(x_next) <= f(x_k) + 1e-9.
ProxStep prox_step(const ObjectiveOracle& f, const BregmanGenerator& gen, double x_k,
                   const LFunc& lambda_k, double c_k, const SolverConfig& cfg = {},
                   LambdaMode mode = LambdaMode::PaperUpdate,
                   TieBreak tiebreak = TieBreak::SmallestAbs);

Trace prox_run(const ObjectiveOracle& f, const BregmanGenerator& gen, double x0,
               const Schedule& sched, const StopRule& stop = {}, const SolverConfig& cfg = {},
               LambdaMode mode = LambdaMode::PaperUpdate,
               TieBreak tiebreak = TieBreak::SmallestAbs);

struct MirrorStep {
    double x_next;
    LFunc lambda_next;
    LFunc u;  // subgradient of f at x_k driving the step
    double step_div;
    double subproblem_value;
};

/// One mirror step: take u in the subdifferential of f at x_k and minimise
/// u(x) + (1/c_k) D^{lambda_k}(x, x_k). The default lambda mode is Refresh:
/// the literal update drifts off the generator's subdifferential whenever
/// the subproblem solution hits the domain boundary, and only the refreshed
/// selection keeps later divergences anchored.
MirrorStep mirror_step(const ObjectiveOracle& f, const BregmanGenerator& gen, double x_k,
                       const LFunc& lambda_k, double c_k, const SolverConfig& cfg = {},
                       LambdaMode mode = LambdaMode::Refresh,
                       TieBreak tiebreak = TieBreak::SmallestAbs);

Trace mirror_run(const ObjectiveOracle& f, const BregmanGenerator& gen, double x0,
                 const Schedule& sched, const StopRule& stop = {}, const SolverConfig& cfg = {},
                 LambdaMode mode = LambdaMode::Refresh,
                 TieBreak tiebreak = TieBreak::SmallestAbs);

struct BestValue {
    int k;
    double f;
};

/// Running minimum of f over the trace and the first index attaining it.
BestValue best_value(const Trace& trace);

struct LevelCheck {
    double alpha;
    bool bounded;  // sublevel set stays off the probe boundary
};

struct CandidateCheck {
    double x;
    double div;
    bool finite;
};

struct AssumptionReport {
    std::vector<LevelCheck> levels;
    std::vector<CandidateCheck> candidates;
};

/// Empirical screen of the divergence assumptions: for each level alpha,
/// whether {x in probe : D(x, x0) <= alpha} touches the probe boundary
/// (a warning that it may be unbounded at this scale), and whether
/// D(x*, x0) is finite for each candidate minimiser. The probe interval
/// must lie inside the generator's domain.
AssumptionReport check_assumptions(const BregmanGenerator& gen, double x0, const Domain& probe,
                                   const std::vector<double>& levels,
                                   const std::vector<double>& candidates = {});

}  // namespace abcopt
