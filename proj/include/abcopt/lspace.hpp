#pragma once

// Algebra of the abstract linear family L = { x -> a*x^2 + b }.
//
// Every "linear" object the algorithms manipulate (subgradients, generator
// selections, running lambda iterates) is an element of this family, so the
// whole space is just a pair of coefficients with pointwise evaluation.

namespace abcopt {

struct LFunc {
    double a = 0.0;  // curvature coefficient of x^2
    double b = 0.0;  // constant offset

    friend bool operator==(const LFunc&, const LFunc&) = default;
};

inline double eval(const LFunc& l, double x) { return l.a * x * x + l.b; }

inline LFunc add(const LFunc& l1, const LFunc& l2) { return {l1.a + l2.a, l1.b + l2.b}; }

inline LFunc scale(const LFunc& l, double c) { return {c * l.a, c * l.b}; }

inline LFunc zero() { return {}; }

inline LFunc operator+(const LFunc& l1, const LFunc& l2) { return add(l1, l2); }
inline LFunc operator-(const LFunc& l1, const LFunc& l2) { return {l1.a - l2.a, l1.b - l2.b}; }
inline LFunc operator*(double c, const LFunc& l) { return scale(l, c); }

}  // namespace abcopt
