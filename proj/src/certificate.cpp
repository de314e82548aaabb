#include "maxcert/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "maxcert/convexity.hpp"
#include "maxcert/errors.hpp"

namespace maxcert {

namespace {

int common_length(const std::vector<Fn>& fns) {
    if (fns.empty()) throw std::invalid_argument("function family is empty");
    const int m = fns[0].size();
    if (m == 0) throw std::invalid_argument("functions must have at least one value");
    for (size_t i = 1; i < fns.size(); ++i) {
        if (fns[i].size() != m) {
            throw std::invalid_argument("function " + std::to_string(i + 1) + " has " +
                                        std::to_string(fns[i].size()) + " values, expected " +
                                        std::to_string(m));
        }
    }
    return m;
}

// min over elements of sum_i weights[i] * fns[i]
Rational combo_min(const std::vector<Fn>& fns, const Vec& weights) {
    const int m = fns[0].size();
    Rational best;
    for (int x = 0; x < m; ++x) {
        Rational v(0);
        for (size_t i = 0; i < fns.size(); ++i) v += weights[i] * fns[i].at(x);
        if (x == 0 || v < best) best = std::move(v);
    }
    return best;
}

} // namespace

SimplexPoint::SimplexPoint(Vec lambda) : lambda_(std::move(lambda)) {
    if (lambda_.empty()) throw std::invalid_argument("simplex point must have a coordinate");
    Rational sum(0);
    for (size_t i = 0; i < lambda_.size(); ++i) {
        if (lambda_[i].sign() < 0) {
            throw std::invalid_argument("simplex coordinate " + std::to_string(i + 1) +
                                        " is negative: " + lambda_[i].str());
        }
        sum += lambda_[i];
    }
    if (sum != Rational(1)) {
        throw std::invalid_argument("simplex coordinates sum to " + sum.str() + ", not 1");
    }
}

Certificate Certificate::feasible(SimplexPoint lambda, Rational margin) {
    Certificate c;
    c.lambda_ = std::move(lambda);
    c.margin_ = std::move(margin);
    return c;
}

Certificate Certificate::infeasible(InfeasibilityWitness witness) {
    Certificate c;
    c.witness_ = std::move(witness);
    return c;
}

const SimplexPoint& Certificate::lambda() const {
    if (!lambda_) throw std::logic_error("infeasible certificate has no multipliers");
    return *lambda_;
}

const Rational& Certificate::margin() const {
    if (!lambda_) throw std::logic_error("infeasible certificate has no margin");
    return margin_;
}

const InfeasibilityWitness& Certificate::witness() const {
    if (!witness_) throw std::logic_error("feasible certificate has no witness");
    return *witness_;
}

MaxNonnegResult check_max_nonneg(const std::vector<Fn>& fns) {
    const int m = common_length(fns);
    for (int x = 0; x < m; ++x) {
        bool some_nonneg = false;
        for (const Fn& f : fns) {
            if (f.at(x).sign() >= 0) {
                some_nonneg = true;
                break;
            }
        }
        if (!some_nonneg) return {false, x};
    }
    return {true, -1};
}

Certificate solve_lp(const std::vector<Fn>& fns) {
    const int m = common_length(fns);
    const int n = static_cast<int>(fns.size());

    Mat rows(m, Vec(n));
    for (int x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i) rows[x][i] = fns[i].at(x);
    MaxMinResult primal = max_min_over_simplex(rows);

    if (primal.value.sign() >= 0) {
        Rational margin = combo_min(fns, primal.weights);
        if (margin != primal.value) throw std::logic_error("optimal margin does not re-evaluate");
        return Certificate::feasible(SimplexPoint(std::move(primal.weights)), std::move(margin));
    }

    // The same solver on the negated transpose yields the optimal element
    // distribution; its value must mirror the primal optimum exactly.
    Mat neg(n, Vec(m));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x) neg[i][x] = -fns[i].at(x);
    MaxMinResult dual = max_min_over_simplex(neg);
    if (-dual.value != primal.value) throw std::logic_error("minimax duality gap");
    return Certificate::infeasible(MinimaxWitness{std::move(dual.weights), primal.value});
}

Certificate solve_two(const Fn& f, const Fn& g) {
    const int m = common_length({f, g});

    // Element x demands lambda * f(x) + (1 - lambda) * g(x) >= 0, i.e. a
    // lower or upper bound on lambda depending on the sign of f(x) - g(x).
    Rational lo(0), hi(1);
    int lo_elem = -1, hi_elem = -1;
    auto conflict = [&]() {
        std::vector<int> elems;
        if (lo_elem >= 0) elems.push_back(lo_elem);
        if (hi_elem >= 0) elems.push_back(hi_elem);
        std::sort(elems.begin(), elems.end());
        return Certificate::infeasible(std::move(elems));
    };
    for (int x = 0; x < m; ++x) {
        const Rational d = f.at(x) - g.at(x);
        if (d.is_zero()) {
            if (g.at(x).sign() < 0) return Certificate::infeasible(std::vector<int>{x});
            continue;
        }
        const Rational bound = -g.at(x) / d;
        if (d.is_positive()) {
            if (bound > lo) {
                lo = bound;
                lo_elem = x;
            }
        } else if (bound < hi) {
            hi = bound;
            hi_elem = x;
        }
        if (lo > hi) return conflict();
    }

    Vec lambda{hi, Rational(1) - hi};
    Rational margin = combo_min({f, g}, lambda);
    if (margin.sign() < 0) throw std::logic_error("interval endpoint violates a constraint");
    return Certificate::feasible(SimplexPoint(std::move(lambda)), std::move(margin));
}

namespace {

Fn affine_combo(const Rational& a, const Fn& f, const Rational& b, const Fn& g) {
    Fn h;
    h.name = a.str() + "*" + f.name + "+" + b.str() + "*" + g.name;
    h.values.reserve(f.values.size());
    for (size_t x = 0; x < f.values.size(); ++x) h.values.push_back(a * f.values[x] + b * g.values[x]);
    return h;
}

// Induction step on a family already known to be convex with pointwise
// max >= 0; both facts are inherited by the blended subfamily.
Certificate recursive_step(const std::vector<Fn>& fns) {
    const int n = static_cast<int>(fns.size());
    if (n == 1) {
        Rational margin = combo_min(fns, {Rational(1)});
        if (margin.sign() < 0) throw std::logic_error("single nonnegative-max function has negative minimum");
        return Certificate::feasible(SimplexPoint({Rational(1)}), std::move(margin));
    }

    Fn g = fn_max(std::vector<Fn>(fns.begin() + 1, fns.end()));
    Certificate head = solve_two(fns[0], g);
    if (!head.is_feasible()) throw std::logic_error("two-function split must be feasible here");
    const Rational lam = head.lambda().at(0);
    const Rational rest = Rational(1) - lam;

    std::vector<Fn> blended;
    blended.reserve(n - 1);
    for (int i = 1; i < n; ++i) blended.push_back(affine_combo(lam, fns[0], rest, fns[i]));
    Certificate sub = recursive_step(blended);
    if (!sub.is_feasible()) throw std::logic_error("inductive subfamily must stay feasible");

    Vec lambda(n);
    lambda[0] = lam;
    for (int i = 1; i < n; ++i) lambda[i] = rest * sub.lambda().at(i - 1);
    Rational margin = combo_min(fns, lambda);
    if (margin != sub.margin()) throw std::logic_error("combined margin does not re-evaluate");
    return Certificate::feasible(SimplexPoint(std::move(lambda)), std::move(margin));
}

} // namespace

Certificate solve_recursive(const std::vector<Fn>& fns, const Magma& magma,
                            const ConvexityParams& params) {
    const int m = common_length(fns);
    if (magma.size() != m) {
        throw std::invalid_argument("functions have " + std::to_string(m) +
                                    " values on a ground set of size " +
                                    std::to_string(magma.size()));
    }
    for (size_t i = 0; i < fns.size(); ++i) {
        auto violations = check_convexity(magma.table(), params.p(), params.q(), fns[i]);
        if (!violations.empty()) {
            throw PreconditionError("function " + std::to_string(i + 1) +
                                    " is not convex under the instance operation: violated at (x, y) = (" +
                                    std::to_string(violations[0].x) + ", " +
                                    std::to_string(violations[0].y) + ")");
        }
    }
    MaxNonnegResult mn = check_max_nonneg(fns);
    if (!mn.ok) {
        throw PreconditionError("pointwise max is negative at element " +
                                std::to_string(mn.witness));
    }
    return recursive_step(fns);
}

VerifyResult verify_certificate(const std::vector<Fn>& fns, const SimplexPoint& lambda) {
    common_length(fns);
    if (lambda.size() != static_cast<int>(fns.size())) {
        throw std::invalid_argument("multiplier vector has " + std::to_string(lambda.size()) +
                                    " entries for " + std::to_string(fns.size()) + " functions");
    }
    Rational margin = combo_min(fns, lambda.values());
    const bool valid = margin.sign() >= 0;
    return {std::move(margin), valid};
}

NfResult check_nf_condition(const std::vector<Fn>& fns) {
    const int m = common_length(fns);
    const int n = static_cast<int>(fns.size());

    std::vector<int> tuple(n, 0);
    for (;;) {
        // Inner problem for this tuple: min over t of max_i sum_j t_j f_i(x_j),
        // computed as the negated max-min of the negated payoff rows.
        Mat neg(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) neg[i][j] = -fns[i].at(tuple[j]);
        MaxMinResult inner = max_min_over_simplex(neg);
        Rational value = -inner.value;
        if (value.sign() < 0) return {false, tuple, std::move(inner.weights), std::move(value)};

        int pos = n - 1;
        while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return {true, {}, {}, Rational(0)};
}

bool LambdaPolytope::contains(const SimplexPoint& lambda) const {
    if (lambda.size() != static_cast<int>(coeffs.size())) {
        throw std::invalid_argument("multiplier vector has " + std::to_string(lambda.size()) +
                                    " entries for " + std::to_string(coeffs.size()) + " functions");
    }
    Rational v(0);
    for (size_t i = 0; i < coeffs.size(); ++i) v += coeffs[i] * lambda.at(static_cast<int>(i));
    return v.sign() >= 0;
}

bool LambdaPolytope::empty() const {
    // The constraint's maximum over the simplex is the largest coefficient.
    Rational best = coeffs[0];
    for (const Rational& c : coeffs) best = std::max(best, c);
    return best.sign() < 0;
}

LambdaPolytope lambda_polytope(const std::vector<Fn>& fns, int x) {
    const int m = common_length(fns);
    if (x < 0 || x >= m) {
        throw std::invalid_argument("element index " + std::to_string(x) +
                                    " out of range for m=" + std::to_string(m));
    }
    Vec coeffs(fns.size());
    for (size_t i = 0; i < fns.size(); ++i) coeffs[i] = fns[i].at(x);
    return {std::move(coeffs)};
}

HellyResult helly_check(const std::vector<Fn>& fns) {
    const int m = common_length(fns);
    const int n = static_cast<int>(fns.size());
    const int k = std::min(n, m);

    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
        Mat rows(k, Vec(n));
        for (int r = 0; r < k; ++r)
            for (int i = 0; i < n; ++i) rows[r][i] = fns[i].at(subset[r]);
        if (max_min_over_simplex(rows).value.sign() < 0) return {false, subset};

        // next k-combination of {0..m-1} in lexicographic order
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int j = pos + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return {true, {}};
}

} // namespace maxcert
