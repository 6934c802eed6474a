#include "ldp/linear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ldp/io.hpp"

namespace ldp {

void LinearConstraint::canonicalize() {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (const Term& t : terms) {
        if (!merged.empty() && merged.back().var == t.var) merged.back().coeff += t.coeff;
        else merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0.0; });
    terms = std::move(merged);
}

bool LinearConstraint::is_canonical() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coeff == 0.0) return false;
        if (i > 0 && !(terms[i - 1].var < terms[i].var)) return false;
    }
    return true;
}

VariableLayout VariableLayout::of(const Instance& instance) {
    return VariableLayout{instance.num_nodes(), static_cast<int>(instance.base_edges().size()),
                          static_cast<int>(instance.lifted_edges().size())};
}

bool VariableLayout::contains(VariableHandle h) const {
    if (h.index < 0) return false;
    switch (h.kind) {
        case VariableKind::node: return h.index < nodes;
        case VariableKind::base_edge: return h.index < base;
        case VariableKind::lifted_edge: return h.index < lifted;
    }
    return false;
}

int VariableLayout::column(VariableHandle h) const {
    if (!contains(h)) throw std::out_of_range("variable handle outside layout");
    switch (h.kind) {
        case VariableKind::node: return h.index;
        case VariableKind::base_edge: return nodes + h.index;
        case VariableKind::lifted_edge: return nodes + base + h.index;
    }
    return -1;
}

VariableHandle VariableLayout::handle(int column) const {
    if (column < 0 || column >= size()) throw std::out_of_range("column outside layout");
    if (column < nodes) return VariableHandle::node(column);
    if (column < nodes + base) return VariableHandle::base(column - nodes);
    return VariableHandle::lifted(column - nodes - base);
}

const char* sense_symbol(Sense sense) {
    switch (sense) {
        case Sense::less_equal: return "<=";
        case Sense::equal: return "=";
        case Sense::greater_equal: return ">=";
    }
    return "?";
}

std::string variable_name(const Instance& instance, VariableHandle h) {
    switch (h.kind) {
        case VariableKind::node: return "x[" + to_string(NodeId::inner(h.index)) + "]";
        case VariableKind::base_edge: {
            const auto& e = instance.base_edges().at(h.index);
            return "y[" + to_string(e.tail) + "," + to_string(e.head) + "]";
        }
        case VariableKind::lifted_edge: {
            const auto& e = instance.lifted_edges().at(h.index);
            return "z[" + to_string(e.tail) + "," + to_string(e.head) + "]";
        }
    }
    return "?";
}

std::string dump_constraint(const Instance& instance, const LinearConstraint& c) {
    std::string out = c.tag + ":";
    if (c.terms.empty()) out += " 0";
    for (const Term& t : c.terms) {
        out += ' ';
        out += t.coeff >= 0 ? "+" : "-";
        out += format_exact(std::abs(t.coeff)) + "*" + variable_name(instance, t.var);
    }
    out += std::string(" ") + sense_symbol(c.sense) + " " + format_exact(c.rhs);
    return out;
}

}  // namespace ldp
