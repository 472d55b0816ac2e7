#pragma once

#include <string>
#include <vector>

#include "abcopt/algorithms.hpp"

namespace abcopt {

/// 17-significant-digit decimal rendering (round-trips doubles exactly).
std::string format_double(double v);

std::string stop_reason_name(StopReason reason);

/// CSV with header k,x,f_x,lambda_a,c_k,step_div,subproblem_value and LF
/// line endings.
std::string trace_to_csv(const Trace& trace);

/// Parses trace_to_csv output back into records (lambda offsets are zero in
/// every emitted trace, so the records round-trip exactly).
std::vector<IterateRecord> trace_from_csv(const std::string& csv);

/// JSON object with the same per-record fields plus stop_reason/warnings.
std::string trace_to_json(const Trace& trace);

}  // namespace abcopt
