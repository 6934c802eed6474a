#include "ldp/solution.hpp"

#include <algorithm>
#include <cmath>

namespace ldp {

namespace {

struct PathIndex {
    std::vector<int> path_of;   // -1 when inactive
    std::vector<int> position;  // index along its path
    std::vector<std::vector<NodeId>> paths;
};

PathIndex index_paths(const Instance& inst, const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    check_flow_conservation(inst, x, y);
    const int n = inst.num_nodes();
    PathIndex idx;
    idx.path_of.assign(n, -1);
    idx.position.assign(n, -1);
    for (int ei : inst.out_base(NodeId::source())) {
        if (!y[ei]) continue;
        std::vector<NodeId> path;
        NodeId v = inst.base_edges()[ei].head;
        while (v.is_inner()) {
            idx.path_of[v.value] = static_cast<int>(idx.paths.size());
            idx.position[v.value] = static_cast<int>(path.size());
            path.push_back(v);
            NodeId next = NodeId::sink();
            for (int oi : inst.out_base(v))
                if (y[oi]) next = inst.base_edges()[oi].head;
            v = next;
        }
        idx.paths.push_back(std::move(path));
    }
    std::sort(idx.paths.begin(), idx.paths.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return idx;
}

}  // namespace

Point Point::zeros(const Instance& instance) {
    Point p;
    p.x.assign(instance.num_nodes(), 0.0);
    p.y.assign(instance.base_edges().size(), 0.0);
    p.y_lifted.assign(instance.lifted_edges().size(), 0.0);
    return p;
}

Point Point::from_solution(const FlowSolution& solution) {
    Point p;
    p.x.assign(solution.x.begin(), solution.x.end());
    p.y.assign(solution.y.begin(), solution.y.end());
    p.y_lifted.assign(solution.y_lifted.begin(), solution.y_lifted.end());
    return p;
}

FlowSolution empty_solution(const Instance& instance) {
    FlowSolution s;
    s.x.assign(instance.num_nodes(), 0);
    s.y.assign(instance.base_edges().size(), 0);
    s.y_lifted.assign(instance.lifted_edges().size(), 0);
    s.objective = 0.0;
    return s;
}

void check_flow_conservation(const Instance& instance, const std::vector<std::uint8_t>& x,
                             const std::vector<std::uint8_t>& y) {
    if (static_cast<int>(x.size()) != instance.num_nodes() || y.size() != instance.base_edges().size())
        throw FlowError("label vectors do not match the instance");
    for (int v = 0; v < instance.num_nodes(); ++v) {
        int in = 0, out = 0;
        for (int ei : instance.in_base(NodeId::inner(v))) in += y[ei] ? 1 : 0;
        for (int ei : instance.out_base(NodeId::inner(v))) out += y[ei] ? 1 : 0;
        int xv = x[v] ? 1 : 0;
        if (in != xv || out != xv)
            throw FlowError("flow conservation violated at node " + std::to_string(v + 1));
    }
}

std::vector<std::uint8_t> lifted_labels_from_flow(const Instance& instance, const std::vector<std::uint8_t>& x,
                                                  const std::vector<std::uint8_t>& y) {
    PathIndex idx = index_paths(instance, x, y);
    std::vector<std::uint8_t> labels(instance.lifted_edges().size(), 0);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& e = instance.lifted_edges()[i];
        int pu = idx.path_of[e.tail.value], pw = idx.path_of[e.head.value];
        labels[i] = (pu >= 0 && pu == pw && idx.position[e.tail.value] < idx.position[e.head.value]) ? 1 : 0;
    }
    return labels;
}

double evaluate_objective(const Instance& instance, const FlowSolution& solution) {
    double total = 0.0;
    for (std::size_t i = 0; i < solution.y.size(); ++i)
        if (solution.y[i]) total += instance.base_edges()[i].cost;
    for (std::size_t i = 0; i < solution.y_lifted.size(); ++i)
        if (solution.y_lifted[i]) total += instance.lifted_edges()[i].cost;
    for (std::size_t v = 0; v < solution.x.size(); ++v)
        if (solution.x[v]) total += instance.node_costs()[v];
    return total;
}

double evaluate_objective(const Instance& instance, const Point& point) {
    double total = 0.0;
    for (std::size_t i = 0; i < point.y.size(); ++i) total += point.y[i] * instance.base_edges()[i].cost;
    for (std::size_t i = 0; i < point.y_lifted.size(); ++i) total += point.y_lifted[i] * instance.lifted_edges()[i].cost;
    for (std::size_t v = 0; v < point.x.size(); ++v) total += point.x[v] * instance.node_costs()[v];
    return total;
}

FlowSolution solution_from_edges(const Instance& instance, const std::vector<std::uint8_t>& y) {
    FlowSolution s = empty_solution(instance);
    if (y.size() != instance.base_edges().size()) throw FlowError("edge label vector has wrong length");
    for (std::size_t i = 0; i < y.size(); ++i) {
        s.y[i] = y[i] ? 1 : 0;
        if (s.y[i] && instance.base_edges()[i].head.is_inner()) s.x[instance.base_edges()[i].head.value] = 1;
    }
    s.y_lifted = lifted_labels_from_flow(instance, s.x, s.y);
    s.objective = evaluate_objective(instance, s);
    return s;
}

FlowSolution solution_from_paths(const Instance& instance, const std::vector<std::vector<NodeId>>& paths) {
    FlowSolution s = empty_solution(instance);
    auto use_edge = [&](NodeId u, NodeId v) {
        auto e = instance.find_base_edge(u, v);
        if (!e) throw FlowError("no base edge " + to_string(u) + "->" + to_string(v));
        s.y[*e] = 1;
    };
    for (const auto& path : paths) {
        if (path.empty()) throw FlowError("empty path");
        NodeId prev = NodeId::source();
        for (NodeId v : path) {
            if (!v.is_inner() || v.value >= instance.num_nodes()) throw FlowError("path contains a non-inner node");
            if (s.x[v.value]) throw FlowError("node " + to_string(v) + " is used twice");
            s.x[v.value] = 1;
            use_edge(prev, v);
            prev = v;
        }
        use_edge(prev, NodeId::sink());
    }
    s.y_lifted = lifted_labels_from_flow(instance, s.x, s.y);
    s.objective = evaluate_objective(instance, s);
    return s;
}

std::vector<std::vector<NodeId>> active_st_paths(const Instance& instance, const FlowSolution& solution) {
    return index_paths(instance, solution.x, solution.y).paths;
}

FlowSolution round_integral(const Instance& instance, const Point& point) {
    auto round_vec = [](const std::vector<double>& in, std::vector<std::uint8_t>& out) {
        out.resize(in.size());
        for (std::size_t i = 0; i < in.size(); ++i) {
            double v = in[i];
            if (std::abs(v) <= 1e-6) out[i] = 0;
            else if (std::abs(v - 1.0) <= 1e-6) out[i] = 1;
            else throw FlowError("flow is not integral");
        }
    };
    FlowSolution s;
    round_vec(point.x, s.x);
    round_vec(point.y, s.y);
    round_vec(point.y_lifted, s.y_lifted);
    s.objective = evaluate_objective(instance, s);
    return s;
}

}  // namespace ldp
