#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "maxcert/instance.hpp"
#include "maxcert/simplex.hpp"

namespace maxcert {

// Multiplier vector: nonnegative entries with exact sum 1.
class SimplexPoint {
public:
    explicit SimplexPoint(Vec lambda);

    int size() const { return static_cast<int>(lambda_.size()); }
    const Rational& at(int i) const { return lambda_[static_cast<size_t>(i)]; }
    const Vec& values() const { return lambda_; }

    bool operator==(const SimplexPoint&) const = default;

private:
    Vec lambda_;
};

// Distribution t over elements with max_i sum_x t_x f_i(x) = value < 0.
// Weak duality then caps every multiplier's margin below value, so no
// certificate can exist.
struct MinimaxWitness {
    Vec t;
    Rational value;
};

// Either a small set of elements whose constraints alone are inconsistent
// (the one-dimensional solver) or a minimax witness (the LP solver).
using InfeasibilityWitness = std::variant<std::vector<int>, MinimaxWitness>;

class Certificate {
public:
    static Certificate feasible(SimplexPoint lambda, Rational margin);
    static Certificate infeasible(InfeasibilityWitness witness);

    bool is_feasible() const { return lambda_.has_value(); }
    // Feasible accessors; throw std::logic_error on an infeasible certificate.
    const SimplexPoint& lambda() const;
    const Rational& margin() const;
    // Infeasible accessor; throws std::logic_error on a feasible certificate.
    const InfeasibilityWitness& witness() const;

private:
    Certificate() = default;

    std::optional<SimplexPoint> lambda_;
    Rational margin_;
    std::optional<InfeasibilityWitness> witness_;
};

struct MaxNonnegResult {
    bool ok;
    int witness;  // first element where every function is negative; -1 when ok
};

// True iff at every element at least one function is >= 0.
MaxNonnegResult check_max_nonneg(const std::vector<Fn>& fns);

// Maximizes the uniform margin min_x sum_i lambda_i f_i(x) over the simplex
// exactly; Feasible iff the optimum is >= 0, with the lexicographically
// greatest optimal lambda. Infeasible results carry a MinimaxWitness.
Certificate solve_lp(const std::vector<Fn>& fns);

// Two-function solver: each element restricts lambda_1 to a closed interval;
// the intersection decides feasibility. Returns the upper endpoint of the
// feasible interval (the lexicographically greatest lambda), or an element
// witness set whose constraints are already inconsistent.
Certificate solve_two(const Fn& f, const Fn& g);

// Inductive solver: splits off f_1 against the max of the rest, then recurses
// on the blended family. Requires every input to be (op, p, q)-convex with
// pointwise max >= 0 (PreconditionError otherwise); under those hypotheses a
// feasible certificate always exists and is returned.
Certificate solve_recursive(const std::vector<Fn>& fns, const Magma& magma,
                            const ConvexityParams& params);

struct VerifyResult {
    Rational margin;  // min_x sum_i lambda_i f_i(x), exact
    bool valid;       // margin >= 0
};

VerifyResult verify_certificate(const std::vector<Fn>& fns, const SimplexPoint& lambda);

struct NfResult {
    bool ok;
    std::vector<int> tuple;  // first n-tuple whose inner optimum is negative
    Vec t;                   // weights attaining that optimum
    Rational value;          // the negative inner optimum
};

// For every n-tuple (x_1..x_n) of elements, with repetition, checks
// min over t in the simplex of max_i sum_j t_j f_i(x_j) >= 0.
NfResult check_nf_condition(const std::vector<Fn>& fns);

// Half-space description of the multipliers admissible at one element:
// all simplex points with sum_i coeffs[i] * lambda_i >= 0.
struct LambdaPolytope {
    Vec coeffs;  // f_i(x) for the fixed element

    bool contains(const SimplexPoint& lambda) const;
    bool empty() const;  // no simplex point satisfies the constraint
};

LambdaPolytope lambda_polytope(const std::vector<Fn>& fns, int x);

struct HellyResult {
    bool ok;
    std::vector<int> subset;  // first element subset with empty intersection
};

// Checks every min(n, m)-element subset of the ground set for a common
// admissible multiplier; by Helly's theorem in dimension n-1 this is
// equivalent to full feasibility.
HellyResult helly_check(const std::vector<Fn>& fns);

} // namespace maxcert
