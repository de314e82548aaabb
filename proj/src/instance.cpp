#include "maxcert/instance.hpp"

#include <stdexcept>
#include <unordered_set>

namespace maxcert {

OpTable::OpTable(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    const int m = static_cast<int>(rows_.size());
    if (m < 1) {
        throw std::invalid_argument("op table must have at least one row");
    }
    for (int x = 0; x < m; ++x) {
        if (static_cast<int>(rows_[x].size()) != m) {
            throw std::invalid_argument("op table row " + std::to_string(x) +
                                        " has " + std::to_string(rows_[x].size()) +
                                        " entries, expected " + std::to_string(m));
        }
        for (int y = 0; y < m; ++y) {
            const int v = rows_[x][y];
            if (v < 0 || v >= m) {
                throw std::invalid_argument("op table entry [" + std::to_string(x) + "][" +
                                            std::to_string(y) + "] = " + std::to_string(v) +
                                            " out of range for m=" + std::to_string(m));
            }
        }
    }
}

Magma::Magma(OpTable table, std::vector<std::string> element_names)
    : table_(std::move(table)), element_names_(std::move(element_names)) {
    if (!element_names_.empty()) {
        if (static_cast<int>(element_names_.size()) != table_.size()) {
            throw std::invalid_argument("element name list must match magma size");
        }
        std::unordered_set<std::string> seen;
        for (const auto& name : element_names_) {
            if (!seen.insert(name).second) {
                throw std::invalid_argument("duplicate element name \"" + name + "\"");
            }
        }
    }
}

ConvexityParams::ConvexityParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
    if (!p_.is_positive()) throw std::invalid_argument("p must be positive, got " + p_.str());
    if (!q_.is_positive()) throw std::invalid_argument("q must be positive, got " + q_.str());
}

Instance::Instance(Magma magma, ConvexityParams params, std::vector<Fn> functions)
    : magma_(std::move(magma)), params_(std::move(params)), functions_(std::move(functions)) {
    for (const auto& f : functions_) {
        if (f.size() != magma_.size()) {
            throw std::invalid_argument("function \"" + f.name + "\" has " +
                                        std::to_string(f.size()) + " values, expected " +
                                        std::to_string(magma_.size()));
        }
    }
}

} // namespace maxcert
