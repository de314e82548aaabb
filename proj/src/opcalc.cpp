#include "maxcert/opcalc.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "maxcert/errors.hpp"

namespace maxcert {

OpTerm OpTerm::base(const ConvexityParams& params) {
    return OpTerm(std::make_shared<Node>(Node{Kind::base, nullptr, nullptr,
                                              params.p(), params.q(), 1}));
}

OpTerm OpTerm::swapped(const OpTerm& t) {
    return OpTerm(std::make_shared<Node>(Node{Kind::swap, t.node_, nullptr,
                                              t.coeff_b(), t.coeff_a(), t.depth() + 1}));
}

OpTerm OpTerm::composed(const OpTerm& s, const OpTerm& t) {
    const Rational& a = s.coeff_a();
    const Rational& b = s.coeff_b();
    const Rational& c = t.coeff_a();
    const Rational& d = t.coeff_b();
    return OpTerm(std::make_shared<Node>(Node{Kind::compose, s.node_, t.node_, a * c,
                                              b * c + a * d + b * d,
                                              std::max(s.depth(), t.depth()) + 1}));
}

OpTerm OpTerm::left() const {
    if (!node_->lhs) throw std::logic_error("base term has no children");
    return OpTerm(node_->lhs);
}

OpTerm OpTerm::right() const {
    if (kind() != Kind::compose) throw std::logic_error("term has no right child");
    return OpTerm(node_->rhs);
}

Rational OpTerm::ratio() const {
    return coeff_a() / (coeff_a() + coeff_b());
}

std::string OpTerm::str() const {
    switch (kind()) {
        case Kind::base:
            return "base";
        case Kind::swap:
            return "swap(" + OpTerm(node_->lhs).str() + ")";
        case Kind::compose:
            return "compose(" + OpTerm(node_->lhs).str() + "," + OpTerm(node_->rhs).str() + ")";
    }
    throw std::logic_error("unreachable");
}

namespace {

struct TermParser {
    std::string_view text;
    size_t pos = 0;
    const ConvexityParams& params;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("term \"" + std::string(text) + "\" at offset " + std::to_string(pos) +
                         ": " + why);
    }

    std::string_view ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an operation name");
        return text.substr(start, pos - start);
    }

    OpTerm term() {
        std::string_view name = ident();
        if (name == "base") return OpTerm::base(params);
        if (name == "swap") {
            if (!eat('(')) fail("expected '('");
            OpTerm t = term();
            if (!eat(')')) fail("expected ')'");
            return OpTerm::swapped(t);
        }
        if (name == "compose") {
            if (!eat('(')) fail("expected '('");
            OpTerm s = term();
            if (!eat(',')) fail("expected ','");
            OpTerm t = term();
            if (!eat(')')) fail("expected ')'");
            return OpTerm::composed(s, t);
        }
        fail("unknown operation \"" + std::string(name) + "\"");
    }
};

} // namespace

OpTerm OpTerm::parse(std::string_view text, const ConvexityParams& params) {
    TermParser p{text, 0, params};
    OpTerm t = p.term();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters");
    return t;
}

namespace {

OpTable realize_table(const OpTerm& term, const OpTable& ground) {
    const int m = ground.size();
    switch (term.kind()) {
        case OpTerm::Kind::base:
            return ground;
        case OpTerm::Kind::swap: {
            OpTable child = realize_table(term.left(), ground);
            std::vector<std::vector<int>> rows(m, std::vector<int>(m));
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) rows[x][y] = child.apply(y, x);
            return OpTable(std::move(rows));
        }
        case OpTerm::Kind::compose: {
            // Composite op: (x, y) -> (x * y) . (y * y); left child gives *, right gives '.'.
            OpTable star = realize_table(term.left(), ground);
            OpTable dot = realize_table(term.right(), ground);
            std::vector<std::vector<int>> rows(m, std::vector<int>(m));
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) rows[x][y] = dot.apply(star.apply(x, y), star.apply(y, y));
            return OpTable(std::move(rows));
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace

RealizedOp realize(const OpTerm& term, const Magma& magma) {
    return RealizedOp{realize_table(term, magma.table()), term.coeff_a(), term.coeff_b()};
}

OpTerm synthesize_ratio(const ConvexityParams& params, const Rational& lo, const Rational& hi,
                        std::optional<int> depth_guard) {
    if (!lo.is_positive() || hi >= Rational(1) || lo > hi) {
        throw std::invalid_argument("target interval [" + lo.str() + ", " + hi.str() +
                                    "] must satisfy 0 < lo <= hi < 1");
    }
    auto inside = [&](const Rational& r) { return lo <= r && r <= hi; };
    auto guard_check = [&](int depth) {
        if (depth_guard && depth > *depth_guard) {
            throw DepthGuardError("ratio synthesis for [" + lo.str() + ", " + hi.str() +
                                  "] exceeded depth guard " + std::to_string(*depth_guard));
        }
    };

    OpTerm base = OpTerm::base(params);
    Rational s0 = base.ratio();
    if (inside(s0)) return base;

    // Raise the base to powers until the complement clears lo/hi. A power
    // landing inside the interval is already an answer.
    const Rational threshold = lo / hi;
    OpTerm power = base;
    Rational pw = s0;
    int k = 1;
    while (Rational(1) - pw <= threshold) {
        power = OpTerm::composed(power, base);
        pw *= s0;
        ++k;
        guard_check(k);
        if (inside(pw)) return power;
    }

    OpTerm s_term = OpTerm::swapped(power);   // ratio s = 1 - s0^k > lo/hi
    const Rational s = s_term.ratio();
    OpTerm chain = s_term;
    Rational sn = s;
    int n = 1;
    while (sn > hi) {
        chain = OpTerm::composed(chain, s_term);
        sn *= s;
        ++n;
        guard_check(k + n);
    }
    // s > lo/hi and minimality of n force sn > lo.
    if (!inside(sn)) throw std::logic_error("ratio synthesis landed outside the target interval");
    return chain;
}

} // namespace maxcert
