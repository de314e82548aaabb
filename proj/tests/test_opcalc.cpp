#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "maxcert/convexity.hpp"
#include "maxcert/errors.hpp"
#include "maxcert/generator.hpp"
#include "maxcert/opcalc.hpp"
#include "testutil.hpp"

using namespace maxcert;
using testutil::cyclic_table;

namespace {

const ConvexityParams kOnes{Rational(1), Rational(1)};
const ConvexityParams kTwoThree{Rational(2), Rational(3)};

OpTerm random_term(Rng& rng, const ConvexityParams& params, int depth_budget) {
    if (depth_budget <= 1 || rng.below(3) == 0) return OpTerm::base(params);
    if (rng.below(2) == 0) return OpTerm::swapped(random_term(rng, params, depth_budget - 1));
    return OpTerm::composed(random_term(rng, params, depth_budget - 1),
                            random_term(rng, params, depth_budget - 1));
}

// Checks every structural invariant of a node against its children, then
// recurses. Returns the number of base leaves.
int verify_node(const OpTerm& t) {
    CHECK(t.coeff_a().is_positive());
    CHECK(t.coeff_b().is_positive());
    CHECK(t.ratio() == t.coeff_a() / (t.coeff_a() + t.coeff_b()));
    CHECK(t.ratio() > Rational(0));
    CHECK(t.ratio() < Rational(1));
    switch (t.kind()) {
        case OpTerm::Kind::base:
            CHECK(t.depth() == 1);
            CHECK(t.str() == "base");
            return 1;
        case OpTerm::Kind::swap: {
            OpTerm c = t.left();
            CHECK(t.coeff_a() == c.coeff_b());
            CHECK(t.coeff_b() == c.coeff_a());
            CHECK(t.ratio() == Rational(1) - c.ratio());
            CHECK(t.depth() == c.depth() + 1);
            CHECK(t.str() == "swap(" + c.str() + ")");
            return verify_node(c);
        }
        case OpTerm::Kind::compose: {
            OpTerm s = t.left();
            OpTerm u = t.right();
            CHECK(t.coeff_a() == s.coeff_a() * u.coeff_a());
            CHECK(t.coeff_b() == s.coeff_b() * u.coeff_a() + s.coeff_a() * u.coeff_b() +
                                     s.coeff_b() * u.coeff_b());
            CHECK(t.ratio() == s.ratio() * u.ratio());
            CHECK(t.coeff_a() + t.coeff_b() ==
                  (s.coeff_a() + s.coeff_b()) * (u.coeff_a() + u.coeff_b()));
            CHECK(t.depth() == 1 + (s.depth() > u.depth() ? s.depth() : u.depth()));
            CHECK(t.str() == "compose(" + s.str() + "," + u.str() + ")");
            return verify_node(s) + verify_node(u);
        }
    }
    FAIL("unknown kind");
    return 0;
}

}  // namespace

TEST_CASE("base carries the raw coefficients") {
    OpTerm t = OpTerm::base(kTwoThree);
    CHECK(t.kind() == OpTerm::Kind::base);
    CHECK(t.coeff_a() == Rational(2));
    CHECK(t.coeff_b() == Rational(3));
    CHECK(t.ratio() == Rational(2, 5));
    CHECK(t.depth() == 1);
    CHECK(t.str() == "base");
    CHECK_THROWS_AS(t.left(), std::logic_error);
    CHECK_THROWS_AS(t.right(), std::logic_error);
}

TEST_CASE("swap exchanges the coefficients") {
    OpTerm t = OpTerm::swapped(OpTerm::base(kTwoThree));
    CHECK(t.kind() == OpTerm::Kind::swap);
    CHECK(t.coeff_a() == Rational(3));
    CHECK(t.coeff_b() == Rational(2));
    CHECK(t.ratio() == Rational(3, 5));
    CHECK(t.depth() == 2);
    CHECK(t.str() == "swap(base)");
    CHECK(t.left().kind() == OpTerm::Kind::base);
    CHECK_THROWS_AS(t.right(), std::logic_error);
}

TEST_CASE("compose multiplies the first coefficient and mixes the second") {
    OpTerm t = OpTerm::composed(OpTerm::base(kOnes), OpTerm::base(kOnes));
    CHECK(t.coeff_a() == Rational(1));
    CHECK(t.coeff_b() == Rational(3));
    CHECK(t.ratio() == Rational(1, 4));
    CHECK(t.depth() == 2);
    CHECK(t.str() == "compose(base,base)");

    OpTerm u = OpTerm::composed(OpTerm::swapped(OpTerm::base(kTwoThree)), OpTerm::base(kTwoThree));
    CHECK(u.coeff_a() == Rational(6));
    CHECK(u.coeff_b() == Rational(19));
    CHECK(u.ratio() == Rational(6, 25));
    CHECK(u.ratio() == Rational(3, 5) * Rational(2, 5));
}

TEST_CASE("structural invariants hold on random terms") {
    std::vector<ConvexityParams> menu{kOnes,
                                      {Rational(1, 2), Rational(1, 2)},
                                      kTwoThree,
                                      {Rational(1), Rational(2)},
                                      {Rational(3), Rational(1, 3)}};
    Rng rng(909);
    for (int i = 0; i < 300; ++i) {
        const auto& params = menu[i % menu.size()];
        OpTerm t = random_term(rng, params, 6);
        int leaves = verify_node(t);
        // the coefficient sum is (p+q) per leaf, multiplied across the tree
        CHECK(t.coeff_a() + t.coeff_b() ==
              Rational::pow(params.p() + params.q(), static_cast<unsigned long>(leaves)));
        OpTerm back = OpTerm::parse(t.str(), params);
        CHECK(back.str() == t.str());
        CHECK(back.coeff_a() == t.coeff_a());
        CHECK(back.coeff_b() == t.coeff_b());
        CHECK(back.depth() == t.depth());
    }
}

TEST_CASE("parsing reports the failure offset") {
    auto message_of = [](const char* text) {
        try {
            OpTerm::parse(text, kOnes);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("swap(base") == "term \"swap(base\" at offset 9: expected ')'");
    CHECK(message_of("compose(base)") == "term \"compose(base)\" at offset 12: expected ','");
    CHECK(message_of("foo") == "term \"foo\" at offset 3: unknown operation \"foo\"");
    CHECK(message_of("") == "term \"\" at offset 0: expected an operation name");
    CHECK(message_of("base)") == "term \"base)\" at offset 4: trailing characters");
    CHECK(message_of("swap()") == "term \"swap()\" at offset 5: expected an operation name");
}

TEST_CASE("parsing tolerates blanks between tokens") {
    OpTerm t = OpTerm::parse("compose( swap(base) ,\tbase )", kTwoThree);
    CHECK(t.str() == "compose(swap(base),base)");
    CHECK(t.coeff_a() == Rational(6));
    CHECK(t.coeff_b() == Rational(19));
}

TEST_CASE("base realizes the ground table itself") {
    Magma z3(cyclic_table(3));
    RealizedOp r = realize(OpTerm::base(kTwoThree), z3);
    CHECK(r.table == cyclic_table(3));
    CHECK(r.a == Rational(2));
    CHECK(r.b == Rational(3));
}

TEST_CASE("swap realizes the transposed table") {
    // x o y = x; the swapped operation is the second projection.
    Magma proj(OpTable({{0, 0}, {1, 1}}));
    RealizedOp r = realize(OpTerm::swapped(OpTerm::base(kOnes)), proj);
    CHECK(r.table == OpTable({{0, 1}, {0, 1}}));
    CHECK(r.a == Rational(1));
    CHECK(r.b == Rational(1));
}

TEST_CASE("composing cyclic addition with itself yields projections") {
    // (x + y) + (y + y) = x + 3y, the identity on the first slot mod 3.
    Magma z3(cyclic_table(3));
    OpTerm t = OpTerm::composed(OpTerm::base(kOnes), OpTerm::base(kOnes));
    CHECK(realize(t, z3).table == OpTable({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));

    Magma z5(cyclic_table(5));
    CHECK(realize(t, z5).table == OpTable({{0, 3, 1, 4, 2},
                                           {1, 4, 2, 0, 3},
                                           {2, 0, 3, 1, 4},
                                           {3, 1, 4, 2, 0},
                                           {4, 2, 0, 3, 1}}));
}

TEST_CASE("convexity transports to realized operations") {
    std::vector<ConvexityParams> menu{kOnes,
                                      {Rational(1, 2), Rational(1, 2)},
                                      kTwoThree,
                                      {Rational(1), Rational(2)}};
    std::vector<MagmaKind> kinds{MagmaKind::random_table, MagmaKind::cyclic_addition,
                                 MagmaKind::max_semilattice};
    Rng rng(606);
    for (int i = 0; i < 40; ++i) {
        const auto& params = menu[i % menu.size()];
        Magma magma = make_magma(kinds[i % kinds.size()], 2 + int(rng.below(3)), rng);
        Fn f = generate_function(FnStrategy::structured, magma, params, rng);
        REQUIRE(is_convex(magma, params, f));
        for (int k = 0; k < 5; ++k) {
            OpTerm t = random_term(rng, params, 4);
            RealizedOp r = realize(t, magma);
            CAPTURE(t.str());
            CHECK(check_convexity(r.table, r.a, r.b, f).empty());
        }
    }
}

TEST_CASE("synthesis returns the base when its ratio already fits") {
    OpTerm t = synthesize_ratio(kOnes, Rational(1, 4), Rational(3, 4));
    CHECK(t.str() == "base");
    CHECK(t.ratio() == Rational(1, 2));
}

TEST_CASE("synthesis hits reachable point targets through powers") {
    OpTerm t = synthesize_ratio(kOnes, Rational(1, 4), Rational(1, 4));
    CHECK(t.ratio() == Rational(1, 4));
    CHECK(t.str() == "compose(base,base)");
}

TEST_CASE("synthesis lands six ninth-powers deep on a tight interval") {
    OpTerm t = synthesize_ratio(ConvexityParams{Rational(1), Rational(2)}, Rational(2, 5),
                                Rational(1, 2));
    CHECK(t.ratio() == Rational::pow(Rational(8, 9), 6));
    CHECK(t.coeff_a() == Rational(262144));
    CHECK(t.coeff_b() == Rational(269297));
    CHECK(t.depth() == 8);
    // the walk stops at the first power inside: one fewer stays above 1/2
    CHECK(Rational::pow(Rational(8, 9), 5) > Rational(1, 2));
    CHECK(Rational::pow(Rational(8, 9), 6) >= Rational(2, 5));
}

TEST_CASE("synthesis stays inside random wide-enough intervals") {
    std::vector<ConvexityParams> menu{kOnes,
                                      {Rational(1, 2), Rational(1, 2)},
                                      kTwoThree,
                                      {Rational(1), Rational(2)},
                                      {Rational(3), Rational(1, 3)}};
    Rng rng(707);
    for (int i = 0; i < 60; ++i) {
        const auto& params = menu[i % menu.size()];
        Rational lo(static_cast<long>(5 + rng.below(975)), 1000);
        Rational hi = lo + Rational(1, 100) + Rational(static_cast<long>(rng.below(9)), 1000);
        REQUIRE(hi < Rational(1));
        OpTerm t = synthesize_ratio(params, lo, hi, 256);
        CAPTURE(lo.str());
        CAPTURE(hi.str());
        CHECK(t.ratio() >= lo);
        CHECK(t.ratio() <= hi);
    }
}

TEST_CASE("the depth guard stops unreachable point targets") {
    // with p = q = 1 every reachable ratio is dyadic, so 1/7 never arrives
    CHECK_THROWS_AS(synthesize_ratio(kOnes, Rational(1, 7), Rational(1, 7), 24), DepthGuardError);
    try {
        synthesize_ratio(kOnes, Rational(1, 7), Rational(1, 7), 24);
    } catch (const DepthGuardError& e) {
        CHECK(std::string(e.what()) ==
              "ratio synthesis for [1/7, 1/7] exceeded depth guard 24");
    }
}

TEST_CASE("synthesis rejects malformed target intervals") {
    CHECK_THROWS_AS(synthesize_ratio(kOnes, Rational(0), Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_ratio(kOnes, Rational(-1, 2), Rational(1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(synthesize_ratio(kOnes, Rational(1, 2), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(synthesize_ratio(kOnes, Rational(3, 4), Rational(1, 4)),
                    std::invalid_argument);
}
