#pragma once

#include <vector>

#include "maxcert/rational.hpp"

namespace maxcert {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status;
    Vec x;               // only meaningful when optimal
    Rational objective;  // only meaningful when optimal
};

// Minimizes c.x subject to A x = b, x >= 0, entirely in exact rationals.
// Two-phase dense tableau with Bland's pivoting rule, so degenerate
// instances terminate. Redundant equality rows are dropped after phase one.
LpResult solve_standard_form(const Mat& a, const Vec& b, const Vec& c);

struct MaxMinResult {
    Rational value;
    Vec weights;  // point of the standard simplex
};

// Maximizes min_k sum_j rows[k][j] * w[j] over the standard simplex
// { w >= 0, sum w = 1 }. Among the optimal w it returns the
// lexicographically greatest one, found by pinning the optimal value and
// then maximizing w[0], w[1], ... in turn. rows must be a nonempty
// rectangular matrix with at least one column.
MaxMinResult max_min_over_simplex(const Mat& rows);

} // namespace maxcert
