#include "ldp/separation.hpp"

#include <unordered_map>

namespace ldp {

namespace {

std::uint64_t key(int path, NodeId node) {
    return (static_cast<std::uint64_t>(path) << 32) | static_cast<std::uint32_t>(node.value);
}

void require_integral(const Instance& instance, const FlowSolution& master) {
    if (master.x.size() != static_cast<std::size_t>(instance.num_nodes()) ||
        master.y.size() != instance.base_edges().size() || master.y_lifted.size() != instance.lifted_edges().size())
        throw FlowError("master solution does not match the instance");
}

EdgeRef base_step(const Instance& instance, NodeId a, NodeId b) {
    auto e = instance.find_base_edge(a, b);
    if (!e) throw FlowError("active path uses a missing base edge");
    return {false, *e};
}

}  // namespace

ActivePaths ActivePaths::build(const Instance& instance, const FlowSolution& master) {
    require_integral(instance, master);
    ActivePaths a;
    a.paths = active_st_paths(instance, master);
    a.path_of.assign(instance.num_nodes(), -1);
    a.position.assign(instance.num_nodes(), -1);
    for (int p = 0; p < static_cast<int>(a.paths.size()); ++p)
        for (int i = 0; i < static_cast<int>(a.paths[p].size()); ++i) {
            a.path_of[a.paths[p][i].value] = p;
            a.position[a.paths[p][i].value] = i;
        }
    for (auto v : master.y) a.active_edges += v ? 1 : 0;
    return a;
}

void SeparationReport::add(LinearConstraint constraint) {
    if (auto f = family_from_name(constraint.tag)) ++by_family[static_cast<int>(*f)];
    constraints.push_back(std::move(constraint));
}

void SeparationReport::merge(SeparationReport other) {
    for (auto& c : other.constraints) constraints.push_back(std::move(c));
    for (int i = 0; i < family_count; ++i) by_family[i] += other.by_family[i];
    lifted_inspected += other.lifted_inspected;
    path_nodes_scanned += other.path_nodes_scanned;
    witness_steps += other.witness_steps;
}

PathWitness extract_path(const Instance& instance, const ActivePaths& active, const FlowSolution& master,
                         NodeId from, NodeId to, long* steps) {
    const int p = active.path_of[from.value];
    if (p < 0 || active.path_of[to.value] != p || active.position[from.value] > active.position[to.value])
        throw FlowError("extract_path: nodes are not ordered on one active path");
    const auto& path = active.paths[p];
    const int a = active.position[from.value];
    int j = active.position[to.value];
    std::vector<NodeId> nodes{to};
    std::vector<EdgeRef> edges;
    long work = 0;
    while (j > a) {
        NodeId cur = path[j];
        int best_pos = j, best_edge = -1;
        for (int e : instance.in_lifted(cur)) {
            ++work;
            NodeId i = instance.lifted_edges()[e].tail;
            if (!master.y_lifted[e] || active.path_of[i.value] != p) continue;
            int pi = active.position[i.value];
            if (pi >= a && pi < best_pos) {
                best_pos = pi;
                best_edge = e;
            }
        }
        if (best_edge >= 0) {
            edges.push_back({true, best_edge});
            j = best_pos;
        } else {
            edges.push_back(base_step(instance, path[j - 1], cur));
            --j;
        }
        nodes.push_back(path[j]);
        ++work;
    }
    if (steps) *steps += work;
    PathWitness w;
    w.nodes.assign(nodes.rbegin(), nodes.rend());
    w.edges.assign(edges.rbegin(), edges.rend());
    return w;
}

PathWitness extract_path_forward(const Instance& instance, const ActivePaths& active, const FlowSolution& master,
                                 NodeId from, NodeId to, long* steps) {
    const int p = active.path_of[from.value];
    if (p < 0 || active.path_of[to.value] != p || active.position[from.value] > active.position[to.value])
        throw FlowError("extract_path_forward: nodes are not ordered on one active path");
    const auto& path = active.paths[p];
    const int b = active.position[to.value];
    int i = active.position[from.value];
    PathWitness w;
    w.nodes.push_back(from);
    long work = 0;
    while (i < b) {
        NodeId cur = path[i];
        int best_pos = i, best_edge = -1;
        for (int e : instance.out_lifted(cur)) {
            ++work;
            NodeId j = instance.lifted_edges()[e].head;
            if (!master.y_lifted[e] || active.path_of[j.value] != p) continue;
            int pj = active.position[j.value];
            if (pj <= b && pj > best_pos) {
                best_pos = pj;
                best_edge = e;
            }
        }
        if (best_edge >= 0) {
            w.edges.push_back({true, best_edge});
            i = best_pos;
        } else {
            w.edges.push_back(base_step(instance, cur, path[i + 1]));
            ++i;
        }
        w.nodes.push_back(path[i]);
        ++work;
    }
    if (steps) *steps += work;
    return w;
}

SeparationReport separate_lifted_path(const Instance& instance, const FlowSolution& master) {
    ActivePaths active = ActivePaths::build(instance, master);
    SeparationReport report;
    report.active_edges = active.active_edges;
    report.lifted_edges = static_cast<long>(instance.lifted_edges().size());
    const Point point = Point::from_solution(master);
    for (int p = 0; p < static_cast<int>(active.paths.size()); ++p) {
        for (NodeId v : active.paths[p]) {
            ++report.path_nodes_scanned;
            for (int e : instance.out_lifted(v)) {
                ++report.lifted_inspected;
                NodeId w = instance.lifted_edges()[e].head;
                if (master.y_lifted[e] || active.path_of[w.value] != p) continue;
                PathWitness witness = extract_path(instance, active, master, v, w, &report.witness_steps);
                LinearConstraint c = build_lifted_path_inequality(instance, e, witness);
                if (check_violation(c, point) > 0.0) report.add(std::move(c));
            }
        }
    }
    return report;
}

SeparationReport separate_lifted_cut(const Instance& instance, const FlowSolution& master, bool include_symmetric) {
    ActivePaths active = ActivePaths::build(instance, master);
    SeparationReport report;
    report.active_edges = active.active_edges;
    report.lifted_edges = static_cast<long>(instance.lifted_edges().size());
    const Point point = Point::from_solution(master);

    // Latest node u on path p with y'_uw = 0, keyed by (p, w); earliest node
    // u on path p with y'_vu = 0, keyed by (p, v).
    std::unordered_map<std::uint64_t, int> latest_zero, earliest_zero;
    std::vector<int> forward, backward;

    auto classify = [&](int e) {
        const auto& le = instance.lifted_edges()[e];
        const int pa = active.path_of[le.tail.value];
        const int pb = active.path_of[le.head.value];
        if (pa >= 0 && pa == pb) return;
        if (pa >= 0) {
            if (master.y_lifted[e]) {
                forward.push_back(e);
            } else {
                auto [it, inserted] = latest_zero.emplace(key(pa, le.head), e);
                if (!inserted && active.position[le.tail.value] >
                                     active.position[instance.lifted_edges()[it->second].tail.value])
                    it->second = e;
            }
        }
        if (pb >= 0 && include_symmetric) {
            if (master.y_lifted[e]) {
                backward.push_back(e);
            } else {
                auto [it, inserted] = earliest_zero.emplace(key(pb, le.tail), e);
                if (!inserted && active.position[le.head.value] <
                                     active.position[instance.lifted_edges()[it->second].head.value])
                    it->second = e;
            }
        }
    };

    for (const auto& path : active.paths) {
        for (NodeId v : path) {
            ++report.path_nodes_scanned;
            for (int e : instance.out_lifted(v)) {
                ++report.lifted_inspected;
                classify(e);
            }
            if (!include_symmetric) continue;
            for (int e : instance.in_lifted(v)) {
                // Edges with an active tail were classified from the tail side.
                if (active.path_of[instance.lifted_edges()[e].tail.value] >= 0) continue;
                ++report.lifted_inspected;
                classify(e);
            }
        }
    }

    for (int e : forward) {
        const auto& le = instance.lifted_edges()[e];
        NodeId v = le.tail, w = le.head;
        const int p = active.path_of[v.value];
        const auto& path = active.paths[p];
        LinearConstraint c;
        auto it = latest_zero.find(key(p, w));
        if (it != latest_zero.end() &&
            active.position[instance.lifted_edges()[it->second].tail.value] > active.position[v.value]) {
            NodeId u = instance.lifted_edges()[it->second].tail;
            PathWitness witness = extract_path(instance, active, master, v, u, &report.witness_steps);
            c = build_path_induced_cut(instance, e, witness, CutVariant::strengthened);
        } else {
            // Nodes of the path that reach w form a prefix; find its end.
            int lo = active.position[v.value], hi = static_cast<int>(path.size()) - 1;
            while (lo < hi) {
                int mid = (lo + hi + 1) / 2;
                ++report.witness_steps;
                if (instance.reachable(path[mid], w)) lo = mid;
                else hi = mid - 1;
            }
            PathWitness witness = extract_path(instance, active, master, v, path[lo], &report.witness_steps);
            c = build_path_induced_cut(instance, e, witness,
                                       witness.base_only() ? CutVariant::plain : CutVariant::lifted);
        }
        if (check_violation(c, point) > 0.0) report.add(std::move(c));
    }

    for (int e : backward) {
        const auto& le = instance.lifted_edges()[e];
        NodeId v = le.tail, w = le.head;
        const int p = active.path_of[w.value];
        const auto& path = active.paths[p];
        LinearConstraint c;
        auto it = earliest_zero.find(key(p, v));
        if (it != earliest_zero.end() &&
            active.position[instance.lifted_edges()[it->second].head.value] < active.position[w.value]) {
            NodeId u = instance.lifted_edges()[it->second].head;
            PathWitness witness = extract_path_forward(instance, active, master, u, w, &report.witness_steps);
            c = build_symmetric_cut(instance, e, witness, CutVariant::strengthened);
        } else {
            // Nodes of the path reachable from v form a suffix; find its start.
            int lo = 0, hi = active.position[w.value];
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                ++report.witness_steps;
                if (instance.reachable(v, path[mid])) hi = mid;
                else lo = mid + 1;
            }
            PathWitness witness = extract_path_forward(instance, active, master, path[lo], w, &report.witness_steps);
            c = build_symmetric_cut(instance, e, witness,
                                    witness.base_only() ? CutVariant::plain : CutVariant::lifted);
        }
        if (check_violation(c, point) > 0.0) report.add(std::move(c));
    }
    return report;
}

}  // namespace ldp
