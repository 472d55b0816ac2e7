#include "abcopt/checks.hpp"

#include <cmath>
#include <cstdlib>
#include <random>

#include "abcopt/algorithms.hpp"
#include "abcopt/bregman.hpp"
#include "abcopt/functions.hpp"
#include "abcopt/lspace.hpp"
#include "abcopt/solver1d.hpp"

namespace abcopt {

namespace {

double subgrad_check_tol() {
    if (const char* env = std::getenv("ABCOPT_CHECK_SUBGRAD_TOL")) {
        return std::strtod(env, nullptr);
    }
    return 1e-9;
}

bool lspace_axioms(std::ostream& diag) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> I(-1024, 1024);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    // dyadic coefficients keep the axiom checks exact in double arithmetic
    auto dy = [&] { return I(rng) / 16.0; };
    for (int i = 0; i < 1000; ++i) {
        const LFunc l1{dy(), dy()}, l2{dy(), dy()}, l3{dy(), dy()};
        const double s = dy(), x = U(rng) / 2.0;
        if (!(add(add(l1, l2), l3) == add(l1, add(l2, l3)))) {
            diag << "associativity failed\n";
            return false;
        }
        if (!(add(l1, l2) == add(l2, l1))) {
            diag << "commutativity failed\n";
            return false;
        }
        if (!(add(l1, zero()) == l1) || !(add(l1, scale(l1, -1.0)) == zero())) {
            diag << "identity/inverse failed\n";
            return false;
        }
        if (!(scale(add(l1, l2), s) == add(scale(l1, s), scale(l2, s)))) {
            diag << "distributivity failed\n";
            return false;
        }
        const double lhs = eval(add(scale(l1, s), l2), x);
        const double rhs = s * eval(l1, x) + eval(l2, x);
        if (std::abs(lhs - rhs) > 1e-12 * (1.0 + std::abs(rhs))) {
            diag << "eval linearity failed: " << lhs << " vs " << rhs << "\n";
            return false;
        }
    }
    return true;
}

bool oracle_subgradients(std::ostream& diag) {
    const double tol = subgrad_check_tol();
    std::vector<ObjectiveOracle> oracles = example_f_parts();
    oracles.push_back(example_f());
    oracles.push_back(example_phi());
    const int n = 2001;
    for (size_t oi = 0; oi < oracles.size(); ++oi) {
        const ObjectiveOracle& f = oracles[oi];
        const double step = f.domain.width() / (n - 1);
        for (int i = 0; i < n; ++i) {
            const double x = f.domain.lo + i * step;
            const SubdiffSet s = f.subdiff(x);
            if (s.is_empty()) continue;
            const double lo = std::isinf(s.a_lo) ? -1e6 : s.a_lo;
            const double hi = std::isinf(s.a_hi) ? 1e6 : s.a_hi;
            for (double a : {lo, hi}) {
                if (!check_subgradient(f, x, LFunc{a, 0.0}, n, tol)) {
                    diag << "oracle " << oi << ": endpoint a=" << a
                         << " fails the minorant inequality at x=" << x << "\n";
                    return false;
                }
            }
        }
    }
    // evenness and sum consistency of the combined fixture
    const ObjectiveOracle f = example_f();
    const ObjectiveOracle fsum = sum_oracle(example_f_parts());
    const double step = f.domain.width() / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double x = f.domain.lo + i * step;
        if (std::abs(f.eval(x) - f.eval(-x)) > 1e-12) {
            diag << "example_f not even at x=" << x << "\n";
            return false;
        }
        if (f.eval(x) != fsum.eval(x)) {
            diag << "sum_oracle mismatch at x=" << x << "\n";
            return false;
        }
    }
    return true;
}

bool bregman_invariants(std::ostream& diag) {
    const BregmanGenerator gen = example_generator();
    const ObjectiveOracle phi = gen.phi;
    // identity and even-base symmetry, exactly
    for (double y : {0.5, -0.5, 1.25, 3.0}) {
        if (divergence(gen, y, y) != 0.0) {
            diag << "D(y,y) != 0 at y=" << y << "\n";
            return false;
        }
    }
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> U(-5.0, 5.0);
    for (int i = 0; i < 10000; ++i) {
        const double x = U(rng);
        double y = U(rng);
        while (std::abs(y) < 0.05) y = U(rng);
        const double d = divergence(gen, x, y);
        const double closed = -std::abs(x) + std::abs(y) + (x * x - y * y) / (2.0 * std::abs(y));
        if (std::abs(d - closed) > 1e-12) {
            diag << "closed form off by " << std::abs(d - closed) << " at (" << x << "," << y
                 << ")\n";
            return false;
        }
        if (d != divergence(gen, x, -y)) {
            diag << "even-base symmetry broken at (" << x << "," << y << ")\n";
            return false;
        }
        if (d < -1e-12) {
            diag << "negative divergence " << d << "\n";
            return false;
        }
    }
    // flat <= pointwise <= sharp on sampled subgradient sets
    const std::vector<LFunc> samples{{-1.0, 0.0}, {-1.5, 0.0}};
    for (int i = 0; i < 100; ++i) {
        const double x = U(rng);
        const double dflat = divergence_flat(phi, x, 0.5, samples);
        const double dsharp = divergence_sharp(phi, x, 0.5, samples);
        const double dmid = pointwise_divergence(phi, samples[0], x, 0.5);
        if (!(dflat <= dmid && dmid <= dsharp)) {
            diag << "flat/sharp ordering broken at x=" << x << "\n";
            return false;
        }
    }
    // triangle identity on random triples
    for (int i = 0; i < 1000; ++i) {
        double a = U(rng), b = U(rng);
        const double c = U(rng);
        while (std::abs(a) < 1e-3) a = U(rng);
        while (std::abs(b) < 1e-3) b = U(rng);
        const TriangleResidual t = triangle_residual(gen, a, b, c);
        if (std::abs(t.lhs - t.rhs) > 1e-12 * (1.0 + std::abs(t.lhs))) {
            diag << "triangle identity off by " << std::abs(t.lhs - t.rhs) << "\n";
            return false;
        }
    }
    // zero-gap witnesses: divergence vanishes only at x = +-y
    const int n = 801;
    const double step = 10.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double y = -5.0 + i * step;
        if (std::abs(y) < 0.05) continue;
        for (int j = 0; j < n; ++j) {
            const double x = -5.0 + j * step;
            const double d = divergence(gen, x, y);
            const bool twin = std::abs(std::abs(x) - std::abs(y)) < 1e-9;
            if ((d <= 1e-9) != twin) {
                diag << "zero-gap witness mismatch at (" << x << "," << y << ")\n";
                return false;
            }
        }
    }
    return true;
}

bool solver_properties(std::ostream& diag) {
    const Domain dom(-5.0, 5.0);
    // determinism (bit-exact) and even-pair symmetry
    auto even_obj = [](double x) { return x * x - std::abs(x) + 0.25; };
    const MinimizeResult r1 = minimize_scalar(even_obj, dom);
    const MinimizeResult r2 = minimize_scalar(even_obj, dom);
    if (r1.minimizers != r2.minimizers || r1.value != r2.value) {
        diag << "non-deterministic result\n";
        return false;
    }
    if (r1.minimizers.size() != 2 || std::abs(r1.minimizers[0] + r1.minimizers[1]) > 1e-9) {
        diag << "even objective did not return a symmetric pair\n";
        return false;
    }
    // random kinked quartics against a dense scan
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const double a4 = 0.1 + 1.9 * U(rng);
        const double a2 = -3.0 + 6.0 * U(rng);
        const double a1 = -2.0 + 4.0 * U(rng);
        const double b1 = -2.0 + 5.0 * U(rng);
        const double b2 = -2.0 + 5.0 * U(rng);
        const double s1 = -4.0 + 8.0 * U(rng);
        const double s2 = -4.0 + 8.0 * U(rng);
        auto obj = [=](double x) {
            return a4 * x * x * x * x + a2 * x * x + a1 * x + b1 * std::abs(x - s1) +
                   b2 * std::abs(x - s2);
        };
        const MinimizeResult res = minimize_scalar(obj, dom);
        double brute = obj(-5.0);
        const int m = 1000001;
        const double bstep = 10.0 / (m - 1);
        for (int i = 1; i < m; ++i) brute = std::min(brute, obj(-5.0 + i * bstep));
        if (res.value > brute + 1e-6) {
            diag << "solver value " << res.value << " worse than dense scan " << brute << "\n";
            return false;
        }
    }
    return true;
}

bool algorithm_invariants(std::ostream& diag) {
    const ObjectiveOracle f = example_f();
    const BregmanGenerator gen = example_generator();
    const Schedule sched = Schedule::harmonic();
    for (double x0 : {0.25, 1.75, -3.2, 4.4}) {
        for (LambdaMode mode : {LambdaMode::PaperUpdate, LambdaMode::Refresh}) {
            const Trace tr = prox_run(f, gen, x0, sched, {}, {}, mode);
            double S = 0.0;
            const double d0 = divergence(gen, 1.0, x0);
            for (size_t i = 0; i + 1 < tr.records.size(); ++i) {
                const IterateRecord& cur = tr.records[i];
                const IterateRecord& nxt = tr.records[i + 1];
                if (nxt.f_x > cur.f_x + 1e-9) {
                    diag << "descent violated at k=" << nxt.k << " from x0=" << x0 << "\n";
                    return false;
                }
                S += nxt.c_k;
                if (nxt.f_x > -1.0 + d0 / S + 1e-9) {
                    diag << "telescoping bound violated at k=" << nxt.k << "\n";
                    return false;
                }
            }
            const IterateRecord& last = tr.records.back();
            if (std::abs(std::abs(last.x) - 1.0) > 1e-2 || std::abs(last.f_x + 1.0) > 1e-3) {
                diag << "final iterate away from the solution set (x0=" << x0 << ")\n";
                return false;
            }
            for (const IterateRecord& r : tr.records) {
                const double ax = std::abs(r.x);
                if (ax <= 1e-3 || std::abs(ax - 0.5) <= 1e-3) continue;
                if (std::abs(r.lambda.a + 1.0 / (2.0 * ax)) > 1e-4) {
                    diag << "lambda inconsistent at k=" << r.k << "\n";
                    return false;
                }
            }
        }
        // sign invariance
        const Trace tp = prox_run(f, gen, x0, sched);
        const Trace tn = prox_run(f, gen, -x0, sched);
        if (tp.records.size() != tn.records.size()) {
            diag << "sign-invariance: trace lengths differ\n";
            return false;
        }
        for (size_t i = 0; i < tp.records.size(); ++i) {
            if (std::abs(std::abs(tp.records[i].x) - std::abs(tn.records[i].x)) > 1e-12 ||
                std::abs(tp.records[i].f_x - tn.records[i].f_x) > 1e-12) {
                diag << "sign-invariance broken at k=" << i << "\n";
                return false;
            }
        }
    }
    // projection view of both step rules, on a coarse grid
    const Trace tr = prox_run(f, gen, 0.25, sched);
    const int n = 2001;
    const double step = f.domain.width() / (n - 1);
    for (size_t i = 0; i + 1 < tr.records.size(); ++i) {
        const IterateRecord& cur = tr.records[i];
        const IterateRecord& nxt = tr.records[i + 1];
        const double dstep = pointwise_divergence(gen.phi, cur.lambda, nxt.x, cur.x);
        for (int j = 0; j < n; ++j) {
            const double x = f.domain.lo + j * step;
            if (f.eval(x) <= nxt.f_x &&
                dstep > pointwise_divergence(gen.phi, cur.lambda, x, cur.x) + 1e-8) {
                diag << "prox step is not a divergence projection at k=" << nxt.k << "\n";
                return false;
            }
        }
    }
    const Trace tm = mirror_run(f, gen, 0.25, sched);
    for (size_t i = 0; i + 1 < tm.records.size(); ++i) {
        const IterateRecord& cur = tm.records[i];
        const IterateRecord& nxt = tm.records[i + 1];
        const LFunc u{select_coefficient(f.subdiff(cur.x)), 0.0};
        const double c = nxt.c_k;
        const double rhs = c * eval(u, nxt.x) +
                           pointwise_divergence(gen.phi, cur.lambda, nxt.x, cur.x);
        for (int j = 0; j < n; ++j) {
            const double x = f.domain.lo + j * step;
            const double lhs =
                c * eval(u, x) + pointwise_divergence(gen.phi, cur.lambda, x, cur.x);
            if (lhs < rhs - 1e-8) {
                diag << "mirror step optimality violated at k=" << nxt.k << "\n";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<CheckSuite> invariant_suites() {
    return {
        {"lspace-axioms", lspace_axioms},
        {"oracle-subgradients", oracle_subgradients},
        {"bregman-divergence", bregman_invariants},
        {"solver-global-min", solver_properties},
        {"algorithm-traces", algorithm_invariants},
    };
}

}  // namespace abcopt
