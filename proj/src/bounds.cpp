#include "ldp/bounds.hpp"

#include <algorithm>
#include <functional>

#include "ldp/lp.hpp"

namespace ldp {

namespace {

bool is_path_family(Family f) {
    return f != Family::flow && f != Family::single_cut && f != Family::lifted_flow;
}

// Calls `visit` for every path of at most max_len edges starting at `from`,
// including the single-node path. Lifted steps only when allowed.
void for_each_path(const Instance& instance, NodeId from, int max_len, bool lifted,
                   const std::function<void(const PathWitness&)>& visit) {
    PathWitness w;
    w.nodes.push_back(from);
    std::function<void()> rec = [&] {
        visit(w);
        if (static_cast<int>(w.edges.size()) == max_len) return;
        NodeId cur = w.nodes.back();
        for (int e : instance.out_base(cur)) {
            NodeId h = instance.base_edges()[e].head;
            if (!h.is_inner()) continue;
            w.nodes.push_back(h);
            w.edges.push_back({false, e});
            rec();
            w.nodes.pop_back();
            w.edges.pop_back();
        }
        if (!lifted) return;
        for (int e : instance.out_lifted(cur)) {
            w.nodes.push_back(instance.lifted_edges()[e].head);
            w.edges.push_back({true, e});
            rec();
            w.nodes.pop_back();
            w.edges.pop_back();
        }
    };
    rec();
}

}  // namespace

int longest_witness_path(const Instance& instance) {
    // Lifted edges respect the base topological order because they join
    // reachable pairs.
    const auto& topo = instance.topological_order();
    std::vector<int> longest(instance.num_nodes(), 0);
    int best = 0;
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        NodeId v = *it;
        int here = 0;
        for (int e : instance.out_base(v)) {
            NodeId h = instance.base_edges()[e].head;
            if (h.is_inner()) here = std::max(here, longest[h.value] + 1);
        }
        for (int e : instance.out_lifted(v)) here = std::max(here, longest[instance.lifted_edges()[e].head.value] + 1);
        longest[v.value] = here;
        best = std::max(best, here);
    }
    return best;
}

std::vector<LinearConstraint> enumerate_family(const Instance& instance, Family family, int max_path_len,
                                               long budget) {
    if (max_path_len < 0 || max_path_len > 8) throw BoundError("max path length must lie in [0, 8]");
    if (is_path_family(family)) {
        int longest = longest_witness_path(instance);
        if (longest > max_path_len)
            throw BoundError("instance has witness paths of " + std::to_string(longest) +
                             " edges, more than the max path length " + std::to_string(max_path_len));
    }
    std::vector<LinearConstraint> out;
    auto push = [&](LinearConstraint c) {
        if (static_cast<long>(out.size()) >= budget) throw BoundError("enumeration budget exceeded");
        out.push_back(std::move(c));
    };
    const int num_lifted = static_cast<int>(instance.lifted_edges().size());

    switch (family) {
        case Family::flow:
            for (auto& c : build_all_flow_conservation(instance)) push(std::move(c));
            return out;
        case Family::single_cut:
            for (int e = 0; e < num_lifted; ++e) {
                push(build_single_node_cut(instance, e, CutSide::out_of_tail));
                push(build_single_node_cut(instance, e, CutSide::into_head));
            }
            return out;
        case Family::lifted_flow:
            if (instance.has_frames())
                for (auto& c : build_lifted_flow_inequalities(instance)) push(std::move(c));
            return out;
        default: break;
    }

    const bool forward = family == Family::path || family == Family::lifted_path || family == Family::path_cut ||
                         family == Family::lifted_path_cut || family == Family::lifted_path_cut_strong ||
                         family == Family::multicut_path;
    const bool allow_lifted = family == Family::lifted_path || family == Family::lifted_path_cut ||
                              family == Family::lifted_path_cut_strong || family == Family::sym_lifted_path_cut ||
                              family == Family::sym_lifted_path_cut_strong;

    for (int e = 0; e < num_lifted; ++e) {
        const auto& le = instance.lifted_edges()[e];
        NodeId v = le.tail, w = le.head;
        if (forward) {
            for_each_path(instance, v, max_path_len, allow_lifted, [&](const PathWitness& p) {
                NodeId u = p.back();
                switch (family) {
                    case Family::path:
                        if (u == w) push(build_path_inequality(instance, e, p));
                        break;
                    case Family::multicut_path:
                        if (u == w) push(build_multicut_path_inequality(instance, e, p));
                        break;
                    case Family::lifted_path:
                        if (u == w && !(p.edges.size() == 1 && p.edges[0] == EdgeRef{true, e}))
                            push(build_lifted_path_inequality(instance, e, p));
                        break;
                    case Family::path_cut:
                        if (u != w && instance.reachable(u, w)) push(build_path_induced_cut(instance, e, p, CutVariant::plain));
                        break;
                    case Family::lifted_path_cut:
                        if (u != w && instance.reachable(u, w))
                            push(build_path_induced_cut(instance, e, p, CutVariant::lifted));
                        break;
                    case Family::lifted_path_cut_strong:
                        if (u != w && u != v && instance.find_lifted_edge(u, w))
                            push(build_path_induced_cut(instance, e, p, CutVariant::strengthened));
                        break;
                    default: break;
                }
            });
        } else {
            // Witnesses u -> w: enumerate from every u reachable from v.
            for (int ui = 0; ui < instance.num_nodes(); ++ui) {
                NodeId u = NodeId::inner(ui);
                if (u == v || !instance.reachable(v, u) || !instance.reachable(u, w)) continue;
                if (family == Family::sym_lifted_path_cut_strong && (u == w || !instance.find_lifted_edge(v, u)))
                    continue;
                for_each_path(instance, u, max_path_len, allow_lifted, [&](const PathWitness& p) {
                    if (p.back() != w) return;
                    CutVariant variant = family == Family::sym_path_cut          ? CutVariant::plain
                                         : family == Family::sym_lifted_path_cut ? CutVariant::lifted
                                                                                 : CutVariant::strengthened;
                    push(build_symmetric_cut(instance, e, p, variant));
                });
            }
        }
    }
    return out;
}

double lp_bound(const Instance& instance, const std::vector<Family>& families, int max_path_len, long budget) {
    VariableLayout layout = VariableLayout::of(instance);
    std::vector<double> objective(layout.size(), 0.0);
    for (int v = 0; v < layout.nodes; ++v) objective[v] = instance.node_costs()[v];
    for (int e = 0; e < layout.base; ++e) objective[layout.nodes + e] = instance.base_edges()[e].cost;
    for (int e = 0; e < layout.lifted; ++e) objective[layout.nodes + layout.base + e] = instance.lifted_edges()[e].cost;
    CutPool pool;
    std::vector<milp::Row> rows;
    for (Family f : families)
        for (const auto& c : enumerate_family(instance, f, max_path_len, budget))
            if (pool.insert(c)) rows.push_back(milp::lower_constraint(layout, c));
    milp::LpResult r = milp::solve_lp(layout.size(), objective, rows);
    if (r.status != milp::LpStatus::optimal)
        throw BoundError(std::string("LP relaxation did not solve: ") + milp::to_string(r.status));
    return r.objective;
}

}  // namespace ldp
