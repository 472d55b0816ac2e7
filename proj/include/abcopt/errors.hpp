#pragma once

#include <stdexcept>
#include <string>

namespace abcopt {

/// Raised where an algorithm needs a subgradient but the subdifferential is
/// empty (e.g. the generator phi = -|x| at x = 0).
class DegeneratePointError : public std::runtime_error {
  public:
    explicit DegeneratePointError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a minimisation subproblem has no finite objective value on
/// the search grid.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abcopt
