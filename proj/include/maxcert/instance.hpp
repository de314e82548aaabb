#pragma once

#include <string>
#include <vector>

#include "maxcert/rational.hpp"

namespace maxcert {

// Total binary operation on {0, ..., m-1}: an m x m table of element indices.
// Closure is enforced at construction; nothing else (no associativity, no
// commutativity) is assumed.
class OpTable {
public:
    explicit OpTable(std::vector<std::vector<int>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    int apply(int x, int y) const { return rows_[x][y]; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    bool operator==(const OpTable&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

// Finite magma (X, o): the ground set is {0, ..., m-1}; element names are
// optional display aliases and never affect the mathematics.
class Magma {
public:
    explicit Magma(OpTable table, std::vector<std::string> element_names = {});

    int size() const { return table_.size(); }
    const OpTable& table() const { return table_; }
    const std::vector<std::string>& element_names() const { return element_names_; }
    bool has_names() const { return !element_names_.empty(); }

    bool operator==(const Magma&) const = default;

private:
    OpTable table_;
    std::vector<std::string> element_names_;
};

// The positive constants of the convexity inequality f(x o y) <= p f(x) + q f(y).
class ConvexityParams {
public:
    ConvexityParams(Rational p, Rational q);

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    bool operator==(const ConvexityParams&) const = default;

private:
    Rational p_;
    Rational q_;
};

// A real-valued function on the magma elements, one exact value per element.
struct Fn {
    std::string name;
    std::vector<Rational> values;

    int size() const { return static_cast<int>(values.size()); }
    const Rational& at(int x) const { return values[static_cast<size_t>(x)]; }

    bool operator==(const Fn&) const = default;
};

// A complete problem instance: magma, parameters and a function family.
class Instance {
public:
    Instance(Magma magma, ConvexityParams params, std::vector<Fn> functions);

    const Magma& magma() const { return magma_; }
    const ConvexityParams& params() const { return params_; }
    const std::vector<Fn>& functions() const { return functions_; }
    int size() const { return magma_.size(); }

    bool operator==(const Instance&) const = default;

private:
    Magma magma_;
    ConvexityParams params_;
    std::vector<Fn> functions_;
};

} // namespace maxcert
