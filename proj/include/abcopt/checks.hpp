#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace abcopt {

struct CheckSuite {
    std::string name;
    std::function<bool(std::ostream& diag)> run;
};

/// Property suites behind the `check` subcommand, one per module. The
/// subgradient tolerance used by the oracle suite can be overridden through
/// the ABCOPT_CHECK_SUBGRAD_TOL environment variable (useful for forcing a
/// failure path end-to-end).
std::vector<CheckSuite> invariant_suites();

}  // namespace abcopt
