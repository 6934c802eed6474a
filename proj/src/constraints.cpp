#include "ldp/constraints.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <map>

namespace ldp {

namespace {

constexpr std::array<const char*, family_count> family_names = {
    "flow",
    "single-cut",
    "path",
    "path-cut",
    "lifted-path",
    "lifted-path-cut",
    "lifted-path-cut-strong",
    "sym-path-cut",
    "sym-lifted-path-cut",
    "sym-lifted-path-cut-strong",
    "lifted-flow",
    "multicut-path",
};

const LiftedEdge& lifted_at(const Instance& inst, int lifted) {
    if (lifted < 0 || lifted >= static_cast<int>(inst.lifted_edges().size()))
        throw ConstraintError("lifted edge index out of range");
    return inst.lifted_edges()[lifted];
}

std::vector<std::uint8_t> membership(const Instance& inst, const PathWitness& w) {
    std::vector<std::uint8_t> in(inst.num_nodes(), 0);
    for (NodeId v : w.nodes) in[v.value] = 1;
    return in;
}

bool on_path(const std::vector<std::uint8_t>& in, NodeId v) { return v.is_inner() && in[v.value]; }

// -sum_{ij in P_E'} y'_ij + sum_{ij in P_E' ∩ E} y_ij, scaled by `sign`.
void add_lifted_step_terms(const Instance& inst, const PathWitness& w, double sign, LinearConstraint& c) {
    for (const EdgeRef& e : w.edges) {
        if (!e.lifted) continue;
        const auto& le = inst.lifted_edges()[e.index];
        c.terms.push_back({VariableHandle::lifted(e.index), -sign});
        if (auto parallel = inst.find_base_edge(le.tail, le.head))
            c.terms.push_back({VariableHandle::base(*parallel), sign});
    }
}

LinearConstraint finish(LinearConstraint c, Family family) {
    c.tag = family_name(family);
    c.canonicalize();
    return c;
}

}  // namespace

const char* family_name(Family family) { return family_names[static_cast<int>(family)]; }

std::optional<Family> family_from_name(std::string_view name) {
    for (int i = 0; i < family_count; ++i)
        if (name == family_names[i]) return static_cast<Family>(i);
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> f;
        for (int i = 0; i < family_count; ++i) f.push_back(static_cast<Family>(i));
        return f;
    }();
    return families;
}

bool PathWitness::base_only() const {
    return std::none_of(edges.begin(), edges.end(), [](const EdgeRef& e) { return e.lifted; });
}

PathWitness mixed_witness(const Instance& instance, const std::vector<NodeId>& nodes,
                          const std::vector<int>& lifted_steps) {
    PathWitness w;
    w.nodes = nodes;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        bool lifted = std::find(lifted_steps.begin(), lifted_steps.end(), static_cast<int>(i)) != lifted_steps.end();
        auto e = lifted ? instance.find_lifted_edge(nodes[i], nodes[i + 1])
                        : instance.find_base_edge(nodes[i], nodes[i + 1]);
        if (!e)
            throw ConstraintError(std::string("no ") + (lifted ? "lifted" : "base") + " edge " + to_string(nodes[i]) +
                                  "->" + to_string(nodes[i + 1]));
        w.edges.push_back({lifted, *e});
    }
    validate_witness(instance, w);
    return w;
}

PathWitness base_witness(const Instance& instance, const std::vector<NodeId>& nodes) {
    return mixed_witness(instance, nodes, {});
}

void validate_witness(const Instance& instance, const PathWitness& w) {
    if (w.nodes.empty()) throw ConstraintError("witness path has no nodes");
    if (w.edges.size() + 1 != w.nodes.size()) throw ConstraintError("witness path edge count mismatch");
    for (NodeId v : w.nodes)
        if (!v.is_inner() || v.value >= instance.num_nodes())
            throw ConstraintError("witness path must consist of inner nodes");
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        const EdgeRef& e = w.edges[i];
        NodeId tail, head;
        if (e.lifted) {
            if (e.index < 0 || e.index >= static_cast<int>(instance.lifted_edges().size()))
                throw ConstraintError("witness refers to unknown lifted edge");
            tail = instance.lifted_edges()[e.index].tail;
            head = instance.lifted_edges()[e.index].head;
        } else {
            if (e.index < 0 || e.index >= static_cast<int>(instance.base_edges().size()))
                throw ConstraintError("witness refers to unknown base edge");
            tail = instance.base_edges()[e.index].tail;
            head = instance.base_edges()[e.index].head;
        }
        if (tail != w.nodes[i] || head != w.nodes[i + 1]) throw ConstraintError("witness edge does not join its nodes");
    }
}

std::vector<LinearConstraint> build_flow_conservation(const Instance& instance, NodeId v) {
    if (!v.is_inner() || v.value >= instance.num_nodes()) throw ConstraintError("flow conservation needs an inner node");
    LinearConstraint in, out;
    in.sense = out.sense = Sense::equal;
    for (int e : instance.in_base(v)) in.terms.push_back({VariableHandle::base(e), 1.0});
    for (int e : instance.out_base(v)) out.terms.push_back({VariableHandle::base(e), 1.0});
    in.terms.push_back({VariableHandle::node(v.value), -1.0});
    out.terms.push_back({VariableHandle::node(v.value), -1.0});
    return {finish(std::move(in), Family::flow), finish(std::move(out), Family::flow)};
}

std::vector<LinearConstraint> build_all_flow_conservation(const Instance& instance) {
    std::vector<LinearConstraint> all;
    for (int v = 0; v < instance.num_nodes(); ++v)
        for (auto& c : build_flow_conservation(instance, NodeId::inner(v))) all.push_back(std::move(c));
    return all;
}

LinearConstraint build_single_node_cut(const Instance& instance, int lifted, CutSide side) {
    const auto& le = lifted_at(instance, lifted);
    LinearConstraint c;
    c.sense = Sense::less_equal;
    c.terms.push_back({VariableHandle::lifted(lifted), 1.0});
    if (side == CutSide::out_of_tail) {
        for (int e : instance.out_base(le.tail)) {
            NodeId u = instance.base_edges()[e].head;
            if (instance.reachable(u, le.head)) c.terms.push_back({VariableHandle::base(e), -1.0});
        }
    } else {
        for (int e : instance.in_base(le.head)) {
            NodeId u = instance.base_edges()[e].tail;
            if (instance.reachable(le.tail, u)) c.terms.push_back({VariableHandle::base(e), -1.0});
        }
    }
    return finish(std::move(c), Family::single_cut);
}

namespace {

LinearConstraint path_inequality_terms(const Instance& instance, int lifted, const PathWitness& witness,
                                       Family family) {
    const auto& le = lifted_at(instance, lifted);
    validate_witness(instance, witness);
    if (witness.front() != le.tail || witness.back() != le.head)
        throw ConstraintError("witness must run from the tail to the head of the lifted edge");
    if (witness.nodes.size() < 2) throw ConstraintError("witness path is empty");
    auto in = membership(instance, witness);
    LinearConstraint c;
    c.sense = Sense::greater_equal;
    c.terms.push_back({VariableHandle::lifted(lifted), 1.0});
    for (int e : instance.out_base(le.tail))
        if (on_path(in, instance.base_edges()[e].head)) c.terms.push_back({VariableHandle::base(e), -1.0});
    for (std::size_t k = 1; k + 1 < witness.nodes.size(); ++k)
        for (int e : instance.out_base(witness.nodes[k]))
            if (!on_path(in, instance.base_edges()[e].head)) c.terms.push_back({VariableHandle::base(e), 1.0});
    add_lifted_step_terms(instance, witness, 1.0, c);
    return finish(std::move(c), family);
}

}  // namespace

LinearConstraint build_path_inequality(const Instance& instance, int lifted, const PathWitness& witness) {
    if (!witness.base_only()) throw ConstraintError("path inequality needs a base path");
    return path_inequality_terms(instance, lifted, witness, Family::path);
}

LinearConstraint build_lifted_path_inequality(const Instance& instance, int lifted, const PathWitness& witness) {
    return path_inequality_terms(instance, lifted, witness, Family::lifted_path);
}

LinearConstraint build_path_induced_cut(const Instance& instance, int lifted, const PathWitness& witness,
                                        CutVariant variant) {
    const auto& le = lifted_at(instance, lifted);
    validate_witness(instance, witness);
    NodeId v = le.tail, w = le.head, u = witness.back();
    if (witness.front() != v) throw ConstraintError("cut witness must start at the tail of the lifted edge");
    if (u == w) throw ConstraintError("cut witness must not end at the head of the lifted edge");
    if (!instance.reachable(u, w)) throw ConstraintError("head is not reachable from the witness end");
    if (variant == CutVariant::plain && !witness.base_only())
        throw ConstraintError("plain path-induced cut needs a base path");
    std::optional<int> closing;
    if (variant == CutVariant::strengthened) {
        closing = instance.find_lifted_edge(u, w);
        if (!closing) throw ConstraintError("strengthened cut needs a lifted edge from the witness end to the head");
    }
    auto in = membership(instance, witness);
    LinearConstraint c;
    c.sense = Sense::less_equal;
    c.terms.push_back({VariableHandle::lifted(lifted), 1.0});
    for (NodeId i : witness.nodes) {
        if (closing && i == u) continue;
        for (int e : instance.out_base(i)) {
            NodeId k = instance.base_edges()[e].head;
            if (!on_path(in, k) && instance.reachable(k, w)) c.terms.push_back({VariableHandle::base(e), -1.0});
        }
    }
    add_lifted_step_terms(instance, witness, -1.0, c);
    if (closing) c.terms.push_back({VariableHandle::lifted(*closing), -1.0});
    Family family = variant == CutVariant::plain    ? Family::path_cut
                    : variant == CutVariant::lifted ? Family::lifted_path_cut
                                                    : Family::lifted_path_cut_strong;
    return finish(std::move(c), family);
}

LinearConstraint build_symmetric_cut(const Instance& instance, int lifted, const PathWitness& witness,
                                     CutVariant variant) {
    const auto& le = lifted_at(instance, lifted);
    validate_witness(instance, witness);
    NodeId v = le.tail, w = le.head, u = witness.front();
    if (witness.back() != w) throw ConstraintError("symmetric cut witness must end at the head of the lifted edge");
    if (u == v) throw ConstraintError("symmetric cut witness must not start at the tail of the lifted edge");
    if (!instance.reachable(v, u)) throw ConstraintError("witness start is not reachable from the tail");
    if (variant == CutVariant::plain && !witness.base_only())
        throw ConstraintError("plain symmetric cut needs a base path");
    std::optional<int> closing;
    if (variant == CutVariant::strengthened) {
        closing = instance.find_lifted_edge(v, u);
        if (!closing) throw ConstraintError("strengthened symmetric cut needs a lifted edge from the tail");
    }
    auto in = membership(instance, witness);
    LinearConstraint c;
    c.sense = Sense::less_equal;
    c.terms.push_back({VariableHandle::lifted(lifted), 1.0});
    for (NodeId i : witness.nodes) {
        if (closing && i == u) continue;
        for (int e : instance.in_base(i)) {
            NodeId k = instance.base_edges()[e].tail;
            if (!on_path(in, k) && instance.reachable(v, k)) c.terms.push_back({VariableHandle::base(e), -1.0});
        }
    }
    add_lifted_step_terms(instance, witness, -1.0, c);
    if (closing) c.terms.push_back({VariableHandle::lifted(*closing), -1.0});
    Family family = variant == CutVariant::plain    ? Family::sym_path_cut
                    : variant == CutVariant::lifted ? Family::sym_lifted_path_cut
                                                    : Family::sym_lifted_path_cut_strong;
    return finish(std::move(c), family);
}

std::vector<LinearConstraint> build_lifted_flow_inequalities(const Instance& instance) {
    if (!instance.has_frames()) throw ConstraintError("lifted flow inequalities need frame annotations");
    std::vector<LinearConstraint> out;
    for (int v = 0; v < instance.num_nodes(); ++v) {
        NodeId node = NodeId::inner(v);
        for (bool outgoing : {true, false}) {
            std::map<int, LinearConstraint> by_frame;
            const auto& edges = outgoing ? instance.out_lifted(node) : instance.in_lifted(node);
            for (int e : edges) {
                const auto& le = instance.lifted_edges()[e];
                NodeId other = outgoing ? le.head : le.tail;
                auto& c = by_frame[instance.frame(other)];
                c.terms.push_back({VariableHandle::lifted(e), 1.0});
            }
            for (auto& [frame, c] : by_frame) {
                c.sense = Sense::less_equal;
                c.terms.push_back({VariableHandle::node(v), -1.0});
                out.push_back(finish(std::move(c), Family::lifted_flow));
            }
        }
    }
    return out;
}

LinearConstraint build_multicut_path_inequality(const Instance& instance, int lifted, const PathWitness& witness) {
    const auto& le = lifted_at(instance, lifted);
    validate_witness(instance, witness);
    if (!witness.base_only()) throw ConstraintError("multicut path inequality needs a base path");
    if (witness.front() != le.tail || witness.back() != le.head)
        throw ConstraintError("witness must run from the tail to the head of the lifted edge");
    LinearConstraint c;
    c.sense = Sense::greater_equal;
    c.terms.push_back({VariableHandle::lifted(lifted), 1.0});
    for (const EdgeRef& e : witness.edges) c.terms.push_back({VariableHandle::base(e.index), -1.0});
    c.rhs = 1.0 - static_cast<double>(witness.edges.size());
    return finish(std::move(c), Family::multicut_path);
}

double value_at(const Point& point, VariableHandle h) {
    const std::vector<double>* vec = nullptr;
    switch (h.kind) {
        case VariableKind::node: vec = &point.x; break;
        case VariableKind::base_edge: vec = &point.y; break;
        case VariableKind::lifted_edge: vec = &point.y_lifted; break;
    }
    if (h.index < 0 || h.index >= static_cast<int>(vec->size()))
        throw std::out_of_range("point has no value for a variable of the constraint");
    return (*vec)[h.index];
}

double check_violation(const LinearConstraint& constraint, const Point& point) {
    double lhs = 0.0;
    for (const Term& t : constraint.terms) lhs += t.coeff * value_at(point, t.var);
    double deficit = 0.0;
    switch (constraint.sense) {
        case Sense::less_equal: deficit = lhs - constraint.rhs; break;
        case Sense::greater_equal: deficit = constraint.rhs - lhs; break;
        case Sense::equal: deficit = std::abs(lhs - constraint.rhs); break;
    }
    return deficit > 1e-9 ? deficit : 0.0;
}

std::string CutPool::key(const LinearConstraint& c) {
    std::string k;
    k.reserve(16 + c.terms.size() * 13);
    auto put = [&k](const void* p, std::size_t n) { k.append(static_cast<const char*>(p), n); };
    auto sense = static_cast<std::uint8_t>(c.sense);
    put(&sense, 1);
    put(&c.rhs, sizeof(double));
    for (const Term& t : c.terms) {
        auto kind = static_cast<std::uint8_t>(t.var.kind);
        put(&kind, 1);
        put(&t.var.index, sizeof(int));
        put(&t.coeff, sizeof(double));
    }
    return k;
}

bool CutPool::insert(const LinearConstraint& constraint) {
    if (!constraint.is_canonical()) {
        LinearConstraint copy = constraint;
        copy.canonicalize();
        return keys_.insert(key(copy)).second;
    }
    return keys_.insert(key(constraint)).second;
}

bool CutPool::contains(const LinearConstraint& constraint) const {
    LinearConstraint copy = constraint;
    copy.canonicalize();
    return keys_.count(key(copy)) > 0;
}

}  // namespace ldp
