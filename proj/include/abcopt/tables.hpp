#pragma once

#include <string>
#include <vector>

#include "abcopt/algorithms.hpp"

namespace abcopt {

enum class Method { Prox, Mirror };

/// One start of a benchmark table: the initial point plus the recorded
/// reference iterates (|x_k| and f(x_k)) the run is compared against.
struct TableColumn {
    double x0;
    std::vector<double> expected_abs_x;
    std::vector<double> expected_f;
};

/// A bundled benchmark preset for the example objective: four presets cover
/// both methods with harmonic and constant step schedules.
struct TablePreset {
    int id;
    Method method;
    Schedule schedule;
    Domain domain;
    LambdaMode lambda_mode;
    double tolerance;  // per-entry comparison tolerance on |x| and f
    std::vector<TableColumn> columns;
};

/// Presets 1..4. Throws std::invalid_argument for any other id.
TablePreset table_preset(int id);

struct TableRowResult {
    int k;
    double abs_x;
    double f_x;
    double expected_abs_x;
    double expected_f;
    bool ok;
};

struct TableRunResult {
    double x0;
    std::vector<TableRowResult> rows;
    Trace trace;
};

struct TableReport {
    int id;
    bool pass;
    std::vector<TableRunResult> runs;
};

/// Runs a preset (one trace per column, exactly as many steps as reference
/// rows) and compares each iterate against the recorded values.
TableReport run_table(const TablePreset& preset, const SolverConfig& cfg = {});

}  // namespace abcopt
