#include "abcopt/functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "abcopt/errors.hpp"

namespace abcopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool near(double x, double c) { return std::abs(x - c) <= kKinkTol; }

}  // namespace

Domain::Domain(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        throw std::invalid_argument("Domain: requires finite lo < hi");
    }
}

SubdiffSet SubdiffSet::interval(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw std::invalid_argument("SubdiffSet: requires a_lo <= a_hi");
    }
    SubdiffSet s;
    s.kind = Kind::Interval;
    s.a_lo = lo;
    s.a_hi = hi;
    return s;
}

ObjectiveOracle example_phi(const Domain& dom) {
    auto ev = [dom](double x) -> double {
        if (!dom.contains(x)) return kInf;
        return -std::abs(x);
    };
    auto sd = [](double x) -> SubdiffSet {
        if (near(x, 0.0)) return SubdiffSet::empty();
        return SubdiffSet::singleton(-1.0 / (2.0 * std::abs(x)));
    };
    return {ev, sd, dom};
}

std::vector<ObjectiveOracle> example_f_parts(const Domain& dom) {
    auto f1e = [dom](double x) -> double {
        if (!dom.contains(x)) return kInf;
        return x * x * x * x - x * x;
    };
    auto f1s = [](double x) -> SubdiffSet {
        if (near(x, 0.0)) return SubdiffSet::interval(-kInf, -1.0);
        return SubdiffSet::singleton(2.0 * x * x - 1.0);
    };
    auto f2e = [dom](double x) -> double {
        if (!dom.contains(x)) return kInf;
        return 1.0 - 2.0 * std::abs(x);
    };
    auto f2s = [](double x) -> SubdiffSet {
        if (near(x, 0.0)) return SubdiffSet::empty();
        return SubdiffSet::singleton(-1.0 / std::abs(x));
    };
    auto f3e = [dom](double x) -> double {
        if (!dom.contains(x)) return kInf;
        const double ax = std::abs(x);
        return ax <= 0.5 ? 1.0 - 2.0 * ax : 0.0;
    };
    auto f3s = [](double x) -> SubdiffSet {
        const double ax = std::abs(x);
        if (near(x, 0.0)) return SubdiffSet::empty();
        if (near(ax, 0.5)) return SubdiffSet::interval(-2.0, 0.0);
        if (ax < 0.5) return SubdiffSet::singleton(-1.0 / ax);
        return SubdiffSet::singleton(0.0);
    };
    return {{f1e, f1s, dom}, {f2e, f2s, dom}, {f3e, f3s, dom}};
}

ObjectiveOracle example_f(const Domain& dom) {
    // Same term order as sum_oracle over the parts, so the two oracles agree
    // bit for bit.
    auto ev = [dom](double x) -> double {
        if (!dom.contains(x)) return kInf;
        const double ax = std::abs(x);
        double s = x * x * x * x - x * x;
        s += 1.0 - 2.0 * ax;
        s += ax <= 0.5 ? 1.0 - 2.0 * ax : 0.0;
        return s;
    };
    auto sd = [](double x) -> SubdiffSet {
        const double ax = std::abs(x);
        if (near(x, 0.0)) return SubdiffSet::empty();
        if (near(ax, 0.5)) {
            const double base = 2.0 * x * x - 1.0 - 1.0 / ax;
            return SubdiffSet::interval(base - 2.0, base);
        }
        if (ax < 0.5) return SubdiffSet::singleton(2.0 * x * x - 1.0 - 2.0 / ax);
        return SubdiffSet::singleton(2.0 * x * x - 1.0 - 1.0 / ax);
    };
    return {ev, sd, dom};
}

ObjectiveOracle sum_oracle(const std::vector<ObjectiveOracle>& parts) {
    if (parts.empty()) throw std::invalid_argument("sum_oracle: no parts");
    const Domain dom = parts.front().domain;
    for (const auto& p : parts) {
        if (!(p.domain == dom)) throw std::invalid_argument("sum_oracle: domain mismatch");
    }
    auto ev = [parts](double x) -> double {
        double s = 0.0;
        for (const auto& p : parts) s += p.eval(x);
        return s;
    };
    auto sd = [parts](double x) -> SubdiffSet {
        double lo = 0.0, hi = 0.0;
        for (const auto& p : parts) {
            const SubdiffSet s = p.subdiff(x);
            if (s.is_empty()) return SubdiffSet::empty();
            lo += s.a_lo;
            hi += s.a_hi;
        }
        return SubdiffSet::interval(lo, hi);
    };
    return {ev, sd, dom};
}

bool check_subgradient(const ObjectiveOracle& f, double x, const LFunc& l, int grid_points,
                       double tol) {
    if (!f.domain.contains(x)) {
        throw std::invalid_argument("check_subgradient: x outside domain");
    }
    if (grid_points < 2) throw std::invalid_argument("check_subgradient: grid_points < 2");
    const double fx = f.eval(x);
    const double lx = eval(l, x);
    const double step = f.domain.width() / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        const double y = f.domain.lo + i * step;
        const double fy = f.eval(y);
        if (!std::isfinite(fy)) continue;
        if (fy < fx + eval(l, y) - lx - tol) return false;
    }
    return true;
}

StrictnessResult check_strictness(const std::function<double(double)>& f_eval, double x,
                                  const std::function<double(double)>& u_eval, const Domain& dom,
                                  int grid_points, double tol) {
    if (grid_points < 2) throw std::invalid_argument("check_strictness: grid_points < 2");
    const double fx = f_eval(x);
    const double ux = u_eval(x);
    const double step = dom.width() / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i) {
        const double y = dom.lo + i * step;
        const double gap = f_eval(y) - fx - (u_eval(y) - ux);
        if (gap < -tol) {
            throw std::invalid_argument("check_strictness: u is not a minorant shift at x (gap " +
                                        std::to_string(gap) + " at y=" + std::to_string(y) + ")");
        }
        if (std::abs(y - x) <= 1.5 * step) continue;
        if (gap <= tol) return {false, y};
    }
    return {true, 0.0};
}

double select_coefficient(const SubdiffSet& set, std::optional<double> preferred) {
    if (set.is_empty()) {
        throw DegeneratePointError("select_coefficient: empty subdifferential");
    }
    if (set.is_singleton()) return set.a_lo;
    if (preferred && set.contains(*preferred)) return *preferred;
    const bool lo_inf = std::isinf(set.a_lo);
    const bool hi_inf = std::isinf(set.a_hi);
    if (lo_inf && hi_inf) return 0.0;
    if (lo_inf) return set.a_hi;
    if (hi_inf) return set.a_lo;
    return 0.5 * (set.a_lo + set.a_hi);
}

}  // namespace abcopt
