#include "maxcert/convexity.hpp"

#include <stdexcept>

namespace maxcert {

std::vector<Violation> check_convexity(const OpTable& op, const Rational& a,
                                       const Rational& b, const Fn& f) {
    if (!a.is_positive() || !b.is_positive()) {
        throw std::invalid_argument("convexity coefficients must be positive");
    }
    const int m = op.size();
    if (f.size() != m) {
        throw std::invalid_argument("function \"" + f.name + "\" has " + std::to_string(f.size()) +
                                    " values but the operation table has size " + std::to_string(m));
    }
    std::vector<Violation> violations;
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            Rational lhs = f.at(op.apply(x, y));
            Rational rhs = a * f.at(x) + b * f.at(y);
            if (lhs > rhs) {
                violations.push_back({x, y, std::move(lhs), std::move(rhs)});
            }
        }
    }
    return violations;
}

namespace {

void require_same_size(const Fn& f, const Fn& g) {
    if (f.size() != g.size()) {
        throw std::invalid_argument("size mismatch: \"" + f.name + "\" has " +
                                    std::to_string(f.size()) + " values, \"" + g.name + "\" has " +
                                    std::to_string(g.size()));
    }
}

} // namespace

Fn fn_add(const Fn& f, const Fn& g) {
    require_same_size(f, g);
    Fn out;
    out.name = f.name + "+" + g.name;
    out.values.reserve(f.values.size());
    for (size_t i = 0; i < f.values.size(); ++i) {
        out.values.push_back(f.values[i] + g.values[i]);
    }
    return out;
}

Fn fn_scale(const Rational& c, const Fn& f) {
    if (!c.is_positive()) {
        throw std::invalid_argument("scale factor must be positive, got " + c.str());
    }
    Fn out;
    out.name = c.str() + "*" + f.name;
    out.values.reserve(f.values.size());
    for (const auto& v : f.values) out.values.push_back(c * v);
    return out;
}

Fn fn_max(const std::vector<Fn>& fs) {
    if (fs.empty()) throw std::invalid_argument("fn_max requires a nonempty list");
    for (const auto& g : fs) require_same_size(fs.front(), g);
    Fn out;
    out.name = "max(";
    for (size_t k = 0; k < fs.size(); ++k) {
        out.name += (k ? "," : "") + fs[k].name;
    }
    out.name += ")";
    out.values = fs.front().values;
    for (size_t k = 1; k < fs.size(); ++k) {
        for (size_t i = 0; i < out.values.size(); ++i) {
            if (fs[k].values[i] > out.values[i]) out.values[i] = fs[k].values[i];
        }
    }
    return out;
}

} // namespace maxcert
