#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "maxcert/instance.hpp"

namespace maxcert {

// Deterministic random stream. The mt19937_64 sequence is fixed by the
// standard and the derived draws below avoid std distributions, whose
// mappings are implementation-defined; identical seeds therefore give
// identical output on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n), by rejection below the largest multiple of n.
    std::uint64_t below(std::uint64_t n);

    // Uniform in [lo, hi], inclusive.
    long range(long lo, long hi);

    // splitmix64 scramble for deriving independent per-index streams.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

private:
    std::mt19937_64 engine_;
};

enum class MagmaKind { random_table, cyclic_addition, max_semilattice };
enum class FnStrategy { rejection, repair, structured };

Magma make_magma(MagmaKind kind, int m, Rng& rng);

// One pass of downward clamping per sweep: f(x o y) <- min(f(x o y),
// p f(x) + q f(y)). A sweep with no change is a fixpoint, which is convex by
// construction. Returns nothing when a value crosses the divergence floor
// -(p + q + 1) * max|initial| * m or the sweep cap 10 m^2 is reached.
std::optional<Fn> repair_function(Fn f, const OpTable& op, const ConvexityParams& params);

// One convex function by the chosen strategy. Throws GenerationError with
// attempt statistics once `budget` candidates have been rejected; the
// structured strategy always yields within budget.
Fn generate_function(FnStrategy strategy, const Magma& magma, const ConvexityParams& params,
                     Rng& rng, int budget = 200);

// Family of n convex functions named f1..fn. When require_max_nonneg is set,
// families whose pointwise max dips negative are redrawn; if the budget runs
// out, the last function is replaced by the zero function, which is convex
// for every (p, q) and lifts the max to 0.
std::vector<Fn> generate_family(FnStrategy strategy, const Magma& magma,
                                const ConvexityParams& params, int n, Rng& rng,
                                bool require_max_nonneg = true, int budget = 200);

struct GeneratorSpec {
    MagmaKind magma_kind = MagmaKind::random_table;
    int m = 3;
    Rational p = Rational(1);
    Rational q = Rational(1);
    FnStrategy fn_strategy = FnStrategy::structured;
    std::uint64_t seed = 0;
    int count = 1;        // instances to produce
    int n_functions = 2;  // family size per instance
};

// Instance `index` of the batch `spec` describes; deterministic in (seed, index).
Instance generate_instance(const GeneratorSpec& spec, int index);

// A constrained problem satisfying the multiplier hypotheses by
// construction: the objective is convex, nonnegative and zero at x0, and
// every constraint is convex and nonpositive at x0, so x0 solves the
// problem outright.
struct KktInstance {
    Magma magma;
    ConvexityParams params;
    Fn objective;
    std::vector<Fn> constraints;
    int x0;
};

KktInstance generate_kkt_instance(MagmaKind kind, int m, const ConvexityParams& params,
                                  int n_constraints, std::uint64_t seed);

} // namespace maxcert
