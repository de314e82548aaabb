#pragma once

#include <vector>

#include "maxcert/instance.hpp"

namespace maxcert {

// One ordered pair (x, y) breaking f(x o y) <= a f(x) + b f(y).
struct Violation {
    int x;
    int y;
    Rational lhs;   // f(x o y)
    Rational rhs;   // a f(x) + b f(y)

    bool operator==(const Violation&) const = default;
};

// Exhaustive scan of all m^2 ordered pairs, in row-major order. The empty
// list means f is (op, a, b)-convex; the decision is exact.
std::vector<Violation> check_convexity(const OpTable& op, const Rational& a,
                                       const Rational& b, const Fn& f);

inline bool is_convex(const OpTable& op, const Rational& a, const Rational& b, const Fn& f) {
    return check_convexity(op, a, b, f).empty();
}
inline bool is_convex(const Magma& magma, const ConvexityParams& params, const Fn& f) {
    return is_convex(magma.table(), params.p(), params.q(), f);
}

// Closure operations: the family of (op, a, b)-convex functions is closed
// under pointwise sum, positive scaling and pointwise maximum.
Fn fn_add(const Fn& f, const Fn& g);
Fn fn_scale(const Rational& c, const Fn& f);
Fn fn_max(const std::vector<Fn>& fs);

} // namespace maxcert
