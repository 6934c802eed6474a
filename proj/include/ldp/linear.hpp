#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ldp/instance.hpp"

namespace ldp {

enum class VariableKind : std::uint8_t { node = 0, base_edge = 1, lifted_edge = 2 };

struct VariableHandle {
    VariableKind kind = VariableKind::node;
    int index = 0;

    static VariableHandle node(int i) { return {VariableKind::node, i}; }
    static VariableHandle base(int i) { return {VariableKind::base_edge, i}; }
    static VariableHandle lifted(int i) { return {VariableKind::lifted_edge, i}; }

    friend auto operator<=>(const VariableHandle&, const VariableHandle&) = default;
};

enum class Sense : std::uint8_t { less_equal, equal, greater_equal };

struct Term {
    VariableHandle var;
    double coeff = 0.0;

    friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
    std::vector<Term> terms;
    Sense sense = Sense::less_equal;
    double rhs = 0.0;
    std::string tag;

    // Sorts terms by variable, merges repeated variables and drops zero
    // coefficients.
    void canonicalize();
    bool is_canonical() const;
};

// Maps handles of an instance to dense column indices: nodes first, then
// base edges, then lifted edges.
struct VariableLayout {
    int nodes = 0;
    int base = 0;
    int lifted = 0;

    static VariableLayout of(const Instance& instance);
    int size() const { return nodes + base + lifted; }
    int column(VariableHandle h) const;
    VariableHandle handle(int column) const;
    bool contains(VariableHandle h) const;
};

const char* sense_symbol(Sense sense);

// "tag: +1*x[3] -1*y[s,3] <= 0" with 1-based node labels.
std::string dump_constraint(const Instance& instance, const LinearConstraint& constraint);
std::string variable_name(const Instance& instance, VariableHandle handle);

}  // namespace ldp
