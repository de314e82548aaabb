#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "maxcert/instance.hpp"

namespace maxcert {

// Term algebra of derived binary operations. Every (op, p, q)-convex function
// stays convex under a derived operation, with the node's coefficients:
//
//   base            coefficients (p, q); realizes the magma's own table
//   swap(t)         coefficients (b, a) of t; realizes (x, y) -> t(y, x)
//   compose(s, t)   s:(a,b), t:(c,d) gives (ac, bc + ad + bd);
//                   realizes (x, y) -> t(s(x, y), s(y, y))
//
// The ratio a/(a+b) is multiplicative under compose and complemented under
// swap, so the reachable ratio set is a dense subsemigroup of (0, 1).
// Terms are immutable trees with shared subterms.
class OpTerm {
public:
    enum class Kind { base, swap, compose };

    static OpTerm base(const ConvexityParams& params);
    static OpTerm swapped(const OpTerm& t);
    static OpTerm composed(const OpTerm& s, const OpTerm& t);

    Kind kind() const { return node_->kind; }
    // Children, as cheap shared handles; left() is the only child of swap.
    OpTerm left() const;
    OpTerm right() const;

    const Rational& coeff_a() const { return node_->a; }
    const Rational& coeff_b() const { return node_->b; }

    // a/(a+b), always in (0, 1).
    Rational ratio() const;

    // base has depth 1; swap and compose add one level.
    int depth() const { return node_->depth; }

    // Prefix text form, e.g. "compose(swap(base),base)".
    std::string str() const;
    static OpTerm parse(std::string_view text, const ConvexityParams& params);

private:
    struct Node {
        Kind kind;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
        Rational a;
        Rational b;
        int depth;
    };

    explicit OpTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// A derived operation materialized on a concrete magma.
struct RealizedOp {
    OpTable table;
    Rational a;
    Rational b;
};

RealizedOp realize(const OpTerm& term, const Magma& magma);

// Builds a term whose ratio lies in [lo, hi], 0 < lo <= hi < 1, by exact
// iterated multiplication: walk powers of the base ratio s0 until the
// complement s = 1 - s0^k exceeds lo/hi, then chain compositions of the
// s-term until its ratio drops into the interval. Powers landing in the
// interval on the way are returned immediately, which is what makes point
// targets like [1/4, 1/4] reachable when some s0^k hits them exactly.
//
// Unreachable point targets (lo == hi not of that form) do not terminate
// unless depth_guard is set; the guard bounds the depth of the result and
// throws DepthGuardError when exceeded.
OpTerm synthesize_ratio(const ConvexityParams& params, const Rational& lo, const Rational& hi,
                        std::optional<int> depth_guard = std::nullopt);

} // namespace maxcert
