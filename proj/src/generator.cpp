#include "maxcert/generator.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "maxcert/certificate.hpp"
#include "maxcert/convexity.hpp"
#include "maxcert/errors.hpp"

namespace maxcert {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cannot draw from an empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;  // multiple of n, so the fold is uniform
    for (;;) {
        const std::uint64_t v = engine_();
        if (v < limit) return v % n;
    }
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty integer range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(below(span));
}

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Magma make_magma(MagmaKind kind, int m, Rng& rng) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    std::vector<std::vector<int>> rows(m, std::vector<int>(m));
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            switch (kind) {
                case MagmaKind::random_table:
                    rows[x][y] = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
                    break;
                case MagmaKind::cyclic_addition:
                    rows[x][y] = (x + y) % m;
                    break;
                case MagmaKind::max_semilattice:
                    rows[x][y] = std::max(x, y);
                    break;
            }
        }
    }
    return Magma(OpTable(std::move(rows)));
}

std::optional<Fn> repair_function(Fn f, const OpTable& op, const ConvexityParams& params) {
    const int m = op.size();
    if (f.size() != m) {
        throw std::invalid_argument("function has " + std::to_string(f.size()) +
                                    " values on a ground set of size " + std::to_string(m));
    }
    Rational max_abs(0);
    for (const Rational& v : f.values) {
        const Rational a = v.sign() < 0 ? -v : v;
        if (a > max_abs) max_abs = a;
    }
    const Rational floor = -(params.p() + params.q() + Rational(1)) * max_abs * Rational(m);
    const int cap = 10 * m * m;

    for (int sweep = 0; sweep < cap; ++sweep) {
        bool changed = false;
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                Rational bound = params.p() * f.at(x) + params.q() * f.at(y);
                Rational& slot = f.values[static_cast<size_t>(op.apply(x, y))];
                if (slot > bound) {
                    if (bound < floor) return std::nullopt;  // diverging
                    slot = std::move(bound);
                    changed = true;
                }
            }
        }
        if (!changed) return f;  // fixpoint: no pair violates the inequality
    }
    return std::nullopt;
}

namespace {

Fn constant_fn(const Rational& c, int m) {
    Fn f;
    f.name = "const";
    f.values.assign(static_cast<size_t>(m), c);
    return f;
}

// Candidate pools. Everything here is a guess that the caller validates;
// only the shapes are informed by which operations make them plausible.
Fn simple_seed(const Magma& magma, const ConvexityParams& params, Rng& rng) {
    const int m = magma.size();
    const Rational psum = params.p() + params.q();
    switch (rng.below(4)) {
        case 0: {  // constant; sign chosen so p + q keeps it viable
            long c = 0;
            if (psum == Rational(1)) c = rng.range(-3, 5);
            else if (psum > Rational(1)) c = rng.range(0, 5);
            return constant_fn(Rational(c), m);
        }
        case 1: {  // nonincreasing steps, nonnegative
            Fn f;
            f.name = "steps";
            f.values.assign(static_cast<size_t>(m), Rational(0));
            long acc = rng.range(0, 2);
            for (int x = m - 1; x >= 0; --x) {
                f.values[static_cast<size_t>(x)] = Rational(acc);
                acc += rng.range(0, 2);
            }
            return f;
        }
        case 2: {  // scaled wrap-around distance from 0
            const long c = rng.range(1, 3);
            Fn f;
            f.name = "dist";
            f.values.reserve(static_cast<size_t>(m));
            for (int x = 0; x < m; ++x) f.values.push_back(Rational(c * std::min(x, m - x)));
            return f;
        }
        default: {  // two-level plateau
            const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            const long a = rng.range(0, 4);
            const long b = rng.range(0, 4);
            Fn f;
            f.name = "plateau";
            f.values.reserve(static_cast<size_t>(m));
            for (int x = 0; x < m; ++x) f.values.push_back(Rational(x <= k ? a : b));
            return f;
        }
    }
}

Fn structured_candidate(const Magma& magma, const ConvexityParams& params, Rng& rng) {
    switch (rng.below(4)) {
        case 0:
            return simple_seed(magma, params, rng);
        case 1:
            return fn_add(simple_seed(magma, params, rng), simple_seed(magma, params, rng));
        case 2:
            return fn_max({simple_seed(magma, params, rng), simple_seed(magma, params, rng)});
        default: {
            const Rational c(rng.range(1, 4), rng.range(1, 3));
            return fn_scale(c, simple_seed(magma, params, rng));
        }
    }
}

Fn structured_fallback(const Magma& magma, const ConvexityParams& params, Rng& rng) {
    // Nonnegative constants are convex whenever p + q >= 1; zero always is.
    if (params.p() + params.q() >= Rational(1)) {
        return constant_fn(Rational(rng.range(0, 4)), magma.size());
    }
    return constant_fn(Rational(0), magma.size());
}

Fn integer_candidate(const Magma& magma, const ConvexityParams& params, Rng& rng) {
    // When p + q > 1 a convex function cannot take negative values (apply the
    // inequality at x = y = argmin), so negative samples would never pass.
    const bool nonneg_only = params.p() + params.q() > Rational(1);
    const long lo = nonneg_only ? 0 : -3;
    const long hi = nonneg_only ? 7 : 6;
    Fn f;
    f.name = "sample";
    f.values.reserve(static_cast<size_t>(magma.size()));
    for (int x = 0; x < magma.size(); ++x) f.values.push_back(Rational(rng.range(lo, hi)));
    return f;
}

const char* strategy_name(FnStrategy s) {
    switch (s) {
        case FnStrategy::rejection: return "rejection";
        case FnStrategy::repair: return "repair";
        case FnStrategy::structured: return "structured";
    }
    return "?";
}

} // namespace

Fn generate_function(FnStrategy strategy, const Magma& magma, const ConvexityParams& params,
                     Rng& rng, int budget) {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    int not_convex = 0;
    int diverged = 0;
    for (int attempt = 0; attempt < budget; ++attempt) {
        switch (strategy) {
            case FnStrategy::rejection: {
                Fn cand = integer_candidate(magma, params, rng);
                if (is_convex(magma, params, cand)) return cand;
                ++not_convex;
                break;
            }
            case FnStrategy::repair: {
                Fn start = integer_candidate(magma, params, rng);
                if (auto fixed = repair_function(std::move(start), magma.table(), params)) {
                    return *std::move(fixed);
                }
                ++diverged;
                break;
            }
            case FnStrategy::structured: {
                if (attempt + 1 == budget) return structured_fallback(magma, params, rng);
                Fn cand = structured_candidate(magma, params, rng);
                if (is_convex(magma, params, cand)) return cand;
                ++not_convex;
                break;
            }
        }
    }
    throw GenerationError(std::string("the ") + strategy_name(strategy) +
                          " strategy produced no convex function in " + std::to_string(budget) +
                          " attempts (" + std::to_string(not_convex) + " convexity rejections, " +
                          std::to_string(diverged) + " divergence rejections)");
}

std::vector<Fn> generate_family(FnStrategy strategy, const Magma& magma,
                                const ConvexityParams& params, int n, Rng& rng,
                                bool require_max_nonneg, int budget) {
    if (n < 1) throw std::invalid_argument("family size must be at least 1");
    std::vector<Fn> fns;
    const int family_tries = 20;
    for (int t = 0; t < family_tries; ++t) {
        fns.clear();
        for (int i = 0; i < n; ++i) fns.push_back(generate_function(strategy, magma, params, rng, budget));
        if (!require_max_nonneg || check_max_nonneg(fns).ok) break;
        if (t + 1 == family_tries) {
            fns.back() = constant_fn(Rational(0), magma.size());
        }
    }
    for (int i = 0; i < n; ++i) fns[static_cast<size_t>(i)].name = "f" + std::to_string(i + 1);
    return fns;
}

Instance generate_instance(const GeneratorSpec& spec, int index) {
    if (spec.m < 1) throw std::invalid_argument("m must be at least 1");
    if (spec.n_functions < 1) throw std::invalid_argument("n_functions must be at least 1");
    if (index < 0 || index >= spec.count) {
        throw std::invalid_argument("instance index " + std::to_string(index) +
                                    " out of range for count " + std::to_string(spec.count));
    }
    Rng rng(Rng::mix(spec.seed, static_cast<std::uint64_t>(index)));
    Magma magma = make_magma(spec.magma_kind, spec.m, rng);
    ConvexityParams params(spec.p, spec.q);
    std::vector<Fn> fns = generate_family(spec.fn_strategy, magma, params, spec.n_functions, rng);
    return Instance(std::move(magma), std::move(params), std::move(fns));
}

namespace {

// Convex, nonnegative, and exactly zero at z: the shape depends on the
// operation, the guarantee on the validation below.
Fn vanishing_seed(const Magma& magma, const ConvexityParams& params, int z, Rng& rng) {
    const int m = magma.size();
    for (int attempt = 0; attempt < 30; ++attempt) {
        Fn cand;
        cand.values.assign(static_cast<size_t>(m), Rational(0));
        switch (rng.below(3)) {
            case 0: {  // nonincreasing until z, zero afterwards
                long acc = 0;
                for (int x = z - 1; x >= 0; --x) {
                    acc += rng.range(0, 2);
                    cand.values[static_cast<size_t>(x)] = Rational(acc);
                }
                break;
            }
            case 1: {  // scaled wrap-around distance from z
                const long c = rng.range(1, 3);
                for (int x = 0; x < m; ++x) {
                    const int d = std::min((x - z + m) % m, (z - x + m) % m);
                    cand.values[static_cast<size_t>(x)] = Rational(c * d);
                }
                break;
            }
            default: {  // sparse nonnegative bumps away from z
                for (int x = 0; x < m; ++x) {
                    if (x != z) cand.values[static_cast<size_t>(x)] = Rational(rng.range(0, 3));
                }
                break;
            }
        }
        if (cand.values[static_cast<size_t>(z)].is_zero() && is_convex(magma, params, cand)) {
            return cand;
        }
    }
    return constant_fn(Rational(0), m);
}

} // namespace

KktInstance generate_kkt_instance(MagmaKind kind, int m, const ConvexityParams& params,
                                  int n_constraints, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (n_constraints < 0) throw std::invalid_argument("constraint count must be nonnegative");
    Rng rng(seed);
    Magma magma = make_magma(kind, m, rng);
    const int z = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));

    Fn objective = vanishing_seed(magma, params, z, rng);
    if (rng.below(2) == 0) {
        objective = fn_add(objective, vanishing_seed(magma, params, z, rng));
    }
    objective.name = "f0";

    const bool slack_allowed = params.p() + params.q() <= Rational(1);
    std::vector<Fn> constraints;
    constraints.reserve(static_cast<size_t>(n_constraints));
    for (int i = 0; i < n_constraints; ++i) {
        Fn c;
        if (slack_allowed && rng.below(3) == 0) {
            c = constant_fn(Rational(-rng.range(1, 2)), m);  // strictly slack everywhere
        } else {
            c = vanishing_seed(magma, params, z, rng);
        }
        c.name = "c" + std::to_string(i + 1);
        constraints.push_back(std::move(c));
    }
    return {std::move(magma), params, std::move(objective), std::move(constraints), z};
}

} // namespace maxcert
