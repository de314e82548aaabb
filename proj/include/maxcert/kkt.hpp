#pragma once

#include <vector>

#include "maxcert/certificate.hpp"
#include "maxcert/instance.hpp"

namespace maxcert {

// Multipliers for the constrained problem: minimize f0 over the admissible
// set {x : every constraint value <= 0}, around a candidate solution x0.
struct KktResult {
    SimplexPoint lambda;          // (lambda_0, ..., lambda_n), exact sum 1
    Vec transversality_products;  // lambda_i * f_i(x0) for i >= 1; all zero
    Rational el_margin;           // min_x sum_i lambda_i f_i(x); >= 0
};

// Exact minimizers of f0 over the admissible set; empty when nothing is
// admissible. Indices come back sorted.
std::vector<int> solve_mp_bruteforce(const Fn& f0, const std::vector<Fn>& constraints);

// Forward direction: requires every function (op, p, q)-convex, f0(x0) = 0
// and x0 a brute-force solution (PreconditionError names the failing one).
// Under those hypotheses the pointwise max of (f0, constraints...) is
// nonnegative, the multiplier LP is feasible, and every product
// lambda_i * f_i(x0) vanishes; violations raise std::logic_error.
KktResult kkt_multipliers(const Fn& f0, const std::vector<Fn>& constraints, int x0,
                          const Magma& magma, const ConvexityParams& params);

// Converse direction: given multipliers with lambda_0 > 0, f0(x0) = 0 and x0
// admissible (PreconditionError otherwise; lambda_0 = 0 is reported, never
// silently accepted), returns whether the complementary-slackness products
// vanish and the combined function is pointwise nonnegative. A true result
// certifies minimality, which is re-asserted by brute force. Needs no
// convexity.
bool kkt_verify_converse(const Fn& f0, const std::vector<Fn>& constraints, int x0,
                         const SimplexPoint& lambda);

} // namespace maxcert
