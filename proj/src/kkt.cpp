#include "maxcert/kkt.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "maxcert/convexity.hpp"
#include "maxcert/errors.hpp"

namespace maxcert {

namespace {

void check_sizes(const Fn& f0, const std::vector<Fn>& constraints) {
    const int m = f0.size();
    if (m == 0) throw std::invalid_argument("objective must have at least one value");
    for (size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].size() != m) {
            throw std::invalid_argument("constraint " + std::to_string(i + 1) + " has " +
                                        std::to_string(constraints[i].size()) +
                                        " values, expected " + std::to_string(m));
        }
    }
}

void check_candidate(const Fn& f0, int x0) {
    if (x0 < 0 || x0 >= f0.size()) {
        throw std::invalid_argument("candidate element " + std::to_string(x0) +
                                    " out of range for m=" + std::to_string(f0.size()));
    }
}

bool admissible(const std::vector<Fn>& constraints, int x) {
    for (const Fn& c : constraints) {
        if (c.at(x).sign() > 0) return false;
    }
    return true;
}

std::vector<Fn> whole_family(const Fn& f0, const std::vector<Fn>& constraints) {
    std::vector<Fn> family;
    family.reserve(constraints.size() + 1);
    family.push_back(f0);
    family.insert(family.end(), constraints.begin(), constraints.end());
    return family;
}

} // namespace

std::vector<int> solve_mp_bruteforce(const Fn& f0, const std::vector<Fn>& constraints) {
    check_sizes(f0, constraints);
    std::vector<int> best;
    Rational best_value;
    for (int x = 0; x < f0.size(); ++x) {
        if (!admissible(constraints, x)) continue;
        if (best.empty() || f0.at(x) < best_value) {
            best.assign(1, x);
            best_value = f0.at(x);
        } else if (f0.at(x) == best_value) {
            best.push_back(x);
        }
    }
    return best;
}

KktResult kkt_multipliers(const Fn& f0, const std::vector<Fn>& constraints, int x0,
                          const Magma& magma, const ConvexityParams& params) {
    check_sizes(f0, constraints);
    check_candidate(f0, x0);
    if (magma.size() != f0.size()) {
        throw std::invalid_argument("functions have " + std::to_string(f0.size()) +
                                    " values on a ground set of size " +
                                    std::to_string(magma.size()));
    }

    auto require_convex = [&](const Fn& fn, const std::string& label) {
        auto violations = check_convexity(magma.table(), params.p(), params.q(), fn);
        if (!violations.empty()) {
            throw PreconditionError(label + " is not convex under the instance operation: violated at (x, y) = (" +
                                    std::to_string(violations[0].x) + ", " +
                                    std::to_string(violations[0].y) + ")");
        }
    };
    require_convex(f0, "objective");
    for (size_t i = 0; i < constraints.size(); ++i) {
        require_convex(constraints[i], "constraint " + std::to_string(i + 1));
    }
    if (!f0.at(x0).is_zero()) {
        throw PreconditionError("objective value at the candidate is " + f0.at(x0).str() +
                                ", not 0");
    }
    std::vector<int> minimizers = solve_mp_bruteforce(f0, constraints);
    if (std::find(minimizers.begin(), minimizers.end(), x0) == minimizers.end()) {
        throw PreconditionError(minimizers.empty()
                                    ? "no element satisfies all constraints"
                                    : "element " + std::to_string(x0) +
                                          " does not minimize the objective over the admissible set");
    }

    // From here on failures would contradict the hypotheses just verified.
    std::vector<Fn> family = whole_family(f0, constraints);
    if (!check_max_nonneg(family).ok) {
        throw std::logic_error("pointwise max must be nonnegative at a solution");
    }
    Certificate cert = solve_lp(family);
    if (!cert.is_feasible()) {
        throw std::logic_error("multiplier computation must be feasible at a solution");
    }

    const SimplexPoint& lambda = cert.lambda();
    Vec products(constraints.size());
    for (size_t i = 0; i < constraints.size(); ++i) {
        products[i] = lambda.at(static_cast<int>(i) + 1) * constraints[i].at(x0);
        if (!products[i].is_zero()) {
            throw std::logic_error("complementary slackness must hold at a solution");
        }
    }
    return {lambda, std::move(products), cert.margin()};
}

bool kkt_verify_converse(const Fn& f0, const std::vector<Fn>& constraints, int x0,
                         const SimplexPoint& lambda) {
    check_sizes(f0, constraints);
    check_candidate(f0, x0);
    const int n = static_cast<int>(constraints.size());
    if (lambda.size() != n + 1) {
        throw std::invalid_argument("multiplier vector has " + std::to_string(lambda.size()) +
                                    " entries for " + std::to_string(n) + " constraints");
    }
    if (!lambda.at(0).is_positive()) {
        throw PreconditionError("lambda_0 = 0: degenerate multiplier, the converse is inapplicable");
    }
    if (!f0.at(x0).is_zero()) {
        throw PreconditionError("objective value at the candidate is " + f0.at(x0).str() +
                                ", not 0");
    }
    if (!admissible(constraints, x0)) {
        throw PreconditionError("element " + std::to_string(x0) + " violates a constraint");
    }

    bool slack_ok = true;
    for (int i = 0; i < n; ++i) {
        if (!(lambda.at(i + 1) * constraints[i].at(x0)).is_zero()) {
            slack_ok = false;
            break;
        }
    }
    const VerifyResult combined = verify_certificate(whole_family(f0, constraints), lambda);

    const bool ok = slack_ok && combined.valid;
    if (ok) {
        // With lambda_0 > 0 the two conditions force minimality; trust nothing.
        std::vector<int> minimizers = solve_mp_bruteforce(f0, constraints);
        if (std::find(minimizers.begin(), minimizers.end(), x0) == minimizers.end()) {
            throw std::logic_error("verified multipliers must certify minimality");
        }
    }
    return ok;
}

} // namespace maxcert
