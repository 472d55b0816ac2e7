#include "abcopt/trace_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace abcopt {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string stop_reason_name(StopReason reason) {
    switch (reason) {
        case StopReason::ZeroSubgradient:
            return "zero-subgradient";
        case StopReason::FTol:
            return "f-tol";
        case StopReason::MaxIters:
            return "max-iters";
        case StopReason::ScheduleExhausted:
            return "schedule-exhausted";
    }
    return "unknown";
}

std::string trace_to_csv(const Trace& trace) {
    std::string out = "k,x,f_x,lambda_a,c_k,step_div,subproblem_value\n";
    for (const IterateRecord& r : trace.records) {
        out += std::to_string(r.k);
        for (double v : {r.x, r.f_x, r.lambda.a, r.c_k, r.step_div, r.subproblem_value}) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

std::vector<IterateRecord> trace_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "k,x,f_x,lambda_a,c_k,step_div,subproblem_value") {
        throw std::invalid_argument("trace_from_csv: missing or unexpected header");
    }
    std::vector<IterateRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        double vals[7];
        for (int i = 0; i < 7; ++i) {
            if (!std::getline(ls, field, ',')) {
                throw std::invalid_argument("trace_from_csv: short row");
            }
            vals[i] = std::stod(field);
        }
        IterateRecord r;
        r.k = static_cast<int>(vals[0]);
        r.x = vals[1];
        r.f_x = vals[2];
        r.lambda = {vals[3], 0.0};
        r.c_k = vals[4];
        r.step_div = vals[5];
        r.subproblem_value = vals[6];
        records.push_back(r);
    }
    return records;
}

std::string trace_to_json(const Trace& trace) {
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const IterateRecord& r : trace.records) {
        nlohmann::ordered_json rec;
        rec["k"] = r.k;
        rec["x"] = r.x;
        rec["f_x"] = r.f_x;
        rec["lambda_a"] = r.lambda.a;
        rec["c_k"] = r.c_k;
        rec["step_div"] = r.step_div;
        rec["subproblem_value"] = r.subproblem_value;
        j["records"].push_back(rec);
    }
    j["stop_reason"] = stop_reason_name(trace.reason);
    j["warnings"] = trace.warnings;
    return j.dump(2) + "\n";
}

}  // namespace abcopt
