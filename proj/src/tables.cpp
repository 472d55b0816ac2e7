#include "abcopt/tables.hpp"

#include <cmath>
#include <stdexcept>

namespace abcopt {

TablePreset table_preset(int id) {
    const Domain dom(kDefaultDomainLo, kDefaultDomainHi);
    switch (id) {
        case 1:
            return {1,
                    Method::Prox,
                    Schedule::harmonic(),
                    dom,
                    LambdaMode::PaperUpdate,
                    5e-3,
                    {{0.25,
                      {0.250, 0.728, 0.938, 0.985, 0.996},
                      {0.941, -0.705, -0.982, -0.999, -1.000}},
                     {1.75, {1.75, 1.039, 1.006, 1.001}, {3.816, -0.992, -1.000, -1.000}}}};
        case 2:
            return {2,
                    Method::Prox,
                    Schedule::constant(0.1),
                    dom,
                    LambdaMode::PaperUpdate,
                    5e-3,
                    {{0.25,
                      {0.25, 0.364, 0.5, 0.615, 0.732, 0.832, 0.903, 0.948, 0.973, 0.986, 0.993},
                      {0.941, 0.431, -0.188, -0.465, -0.712, -0.876, -0.957, -0.987, -0.996,
                       -0.999, -1.000}},
                     {1.75,
                      {1.75, 1.23, 1.100, 1.04, 1.020, 1.01, 1.010, 1.00},
                      {3.82, -0.685, -0.95, -0.99, -0.998, -0.999, -1.0, -1.0}}}};
        case 3:
            return {3,
                    Method::Mirror,
                    Schedule::harmonic(),
                    dom,
                    LambdaMode::Refresh,
                    5e-3,
                    {{0.25,
                      {0.25, 5.00, 0.0204, 5.00, 0.0407, 0.221, 0.829, 1.03, 0.991},
                      {0.941, 591.0, 1.92, 591.0, 1.84, 1.07, -0.873, -0.995, -1.000}},
                     {1.75,
                      {1.75, 0.103, 5.00, 0.0306, 5.00, 0.0507, 0.16, 0.416, 0.963, 1.000},
                      {3.82, 1.58, 591.0, 1.88, 591.0, 1.79, 1.33, 0.193, -0.993, -1.000}}}};
        case 4:
            return {4,
                    Method::Mirror,
                    Schedule::constant(0.1),
                    dom,
                    LambdaMode::Refresh,
                    5e-3,
                    {{0.25,
                      {0.25, 0.45, 0.823, 0.959, 0.998},
                      {0.941, 0.0408, -0.864, -0.992, -1.000}},
                     {1.75,
                      {1.75, 0.675, 0.856, 0.973, 0.999},
                      {3.82, -0.597, -0.908, -0.996, -1.000}}}};
        default:
            throw std::invalid_argument("table_preset: id must be 1..4");
    }
}

TableReport run_table(const TablePreset& preset, const SolverConfig& cfg) {
    const ObjectiveOracle f = example_f(preset.domain);
    const BregmanGenerator gen = example_generator(preset.domain);
    TableReport report{preset.id, true, {}};
    for (const TableColumn& col : preset.columns) {
        StopRule stop;
        stop.max_iters = static_cast<int>(col.expected_abs_x.size()) - 1;
        stop.f_tol = 0.0;  // run every recorded step
        stop.zero_subgrad_tol = 0.0;
        Trace tr = preset.method == Method::Prox
                       ? prox_run(f, gen, col.x0, preset.schedule, stop, cfg, preset.lambda_mode)
                       : mirror_run(f, gen, col.x0, preset.schedule, stop, cfg,
                                    preset.lambda_mode);
        TableRunResult run{col.x0, {}, tr};
        for (size_t i = 0; i < col.expected_abs_x.size(); ++i) {
            TableRowResult row{};
            row.k = static_cast<int>(i);
            row.expected_abs_x = col.expected_abs_x[i];
            row.expected_f = col.expected_f[i];
            if (i < tr.records.size()) {
                row.abs_x = std::abs(tr.records[i].x);
                row.f_x = tr.records[i].f_x;
                row.ok = std::abs(row.abs_x - row.expected_abs_x) <= preset.tolerance &&
                         std::abs(row.f_x - row.expected_f) <= preset.tolerance;
            } else {
                row.ok = false;
            }
            if (!row.ok) report.pass = false;
            run.rows.push_back(row);
        }
        report.runs.push_back(std::move(run));
    }
    return report;
}

}  // namespace abcopt
