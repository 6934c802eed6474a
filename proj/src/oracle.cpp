#include "ldp/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace ldp {

namespace {

struct PathRecord {
    std::vector<NodeId> nodes;
    std::vector<int> edges;
    std::vector<std::uint64_t> mask;
};

class PathEnumerator {
public:
    PathEnumerator(const Instance& inst, long limit) : inst_(inst), limit_(limit) {
        succ_.resize(inst.num_slots());
        for (int e = 0; e < static_cast<int>(inst.base_edges().size()); ++e)
            succ_[inst.slot(inst.base_edges()[e].tail)].push_back(e);
        for (auto& list : succ_)
            std::sort(list.begin(), list.end(), [&](int a, int b) {
                return inst.slot(inst.base_edges()[a].head) < inst.slot(inst.base_edges()[b].head);
            });
    }

    std::vector<PathRecord> run() {
        for (int e : succ_[inst_.slot(NodeId::source())]) {
            NodeId h = inst_.base_edges()[e].head;
            edges_.push_back(e);
            dfs(h);
            edges_.pop_back();
        }
        return std::move(out_);
    }

private:
    void dfs(NodeId v) {
        nodes_.push_back(v);
        // A path ending here precedes its extensions lexicographically.
        if (auto te = inst_.find_base_edge(v, NodeId::sink())) {
            if (static_cast<long>(out_.size()) >= limit_) throw EnumerationLimit("too many s-t paths");
            PathRecord rec;
            rec.nodes = nodes_;
            rec.edges = edges_;
            rec.edges.push_back(*te);
            rec.mask.assign((inst_.num_nodes() + 63) / 64, 0);
            for (NodeId u : nodes_) rec.mask[u.value / 64] |= std::uint64_t{1} << (u.value % 64);
            out_.push_back(std::move(rec));
        }
        for (int e : succ_[v.value]) {
            NodeId h = inst_.base_edges()[e].head;
            if (!h.is_inner()) continue;
            edges_.push_back(e);
            dfs(h);
            edges_.pop_back();
        }
        nodes_.pop_back();
    }

    const Instance& inst_;
    long limit_;
    std::vector<std::vector<int>> succ_;
    std::vector<NodeId> nodes_;
    std::vector<int> edges_;
    std::vector<PathRecord> out_;
};

}  // namespace

std::vector<std::vector<NodeId>> enumerate_st_paths(const Instance& instance, long limit) {
    std::vector<std::vector<NodeId>> out;
    for (auto& rec : PathEnumerator(instance, limit).run()) out.push_back(std::move(rec.nodes));
    return out;
}

long for_each_feasible(const Instance& instance, long limit, const std::function<void(const FlowSolution&)>& visit,
                       bool* truncated) {
    if (truncated) *truncated = false;
    std::vector<PathRecord> paths;
    try {
        paths = PathEnumerator(instance, std::max(limit, 1L)).run();
    } catch (const EnumerationLimit&) {
        if (!truncated) throw;
        *truncated = true;
        return 0;
    }
    const int words = (instance.num_nodes() + 63) / 64;
    std::vector<std::uint64_t> used(words, 0);
    FlowSolution current = empty_solution(instance);
    std::vector<int> path_of(instance.num_nodes(), -1), position(instance.num_nodes(), -1);
    long visited = 0;
    bool stop = false;

    auto emit = [&] {
        if (visited >= limit) {
            stop = true;
            return;
        }
        for (std::size_t e = 0; e < current.y_lifted.size(); ++e) {
            const auto& le = instance.lifted_edges()[e];
            int p = path_of[le.tail.value];
            current.y_lifted[e] = (p >= 0 && p == path_of[le.head.value] &&
                                   position[le.tail.value] < position[le.head.value]) ? 1 : 0;
        }
        current.objective = evaluate_objective(instance, current);
        ++visited;
        visit(current);
    };

    auto set_path = [&](int i, bool on) {
        const auto& rec = paths[i];
        for (int w = 0; w < words; ++w) used[w] ^= rec.mask[w];
        for (std::size_t k = 0; k < rec.nodes.size(); ++k) {
            int v = rec.nodes[k].value;
            current.x[v] = on ? 1 : 0;
            path_of[v] = on ? i : -1;
            position[v] = on ? static_cast<int>(k) : -1;
        }
        for (int e : rec.edges) current.y[e] = on ? 1 : 0;
    };

    std::function<void(int)> rec = [&](int start) {
        emit();
        if (stop) return;
        for (int i = start; i < static_cast<int>(paths.size()); ++i) {
            bool disjoint = true;
            for (int w = 0; w < words && disjoint; ++w) disjoint = (used[w] & paths[i].mask[w]) == 0;
            if (!disjoint) continue;
            set_path(i, true);
            rec(i + 1);
            set_path(i, false);
            if (stop) return;
        }
    };
    rec(0);
    if (truncated) *truncated = stop;
    return visited;
}

Enumeration enumerate_feasible(const Instance& instance, long limit) {
    Enumeration out;
    for_each_feasible(instance, limit, [&](const FlowSolution& s) { out.solutions.push_back(s); }, &out.truncated);
    return out;
}

FlowSolution brute_force_optimum(const Instance& instance, long limit) {
    FlowSolution best;
    bool have = false;
    std::vector<int> best_nodes;
    auto active_nodes = [](const FlowSolution& s) {
        std::vector<int> nodes;
        for (int v = 0; v < static_cast<int>(s.x.size()); ++v)
            if (s.x[v]) nodes.push_back(v);
        return nodes;
    };
    bool truncated = false;
    for_each_feasible(
        instance, limit,
        [&](const FlowSolution& s) {
            if (!have || s.objective < best.objective - cost_tolerance) {
                best = s;
                best_nodes = active_nodes(s);
                have = true;
            } else if (std::abs(s.objective - best.objective) <= cost_tolerance) {
                auto nodes = active_nodes(s);
                if (nodes < best_nodes) {
                    best = s;
                    best_nodes = std::move(nodes);
                }
            }
        },
        &truncated);
    if (truncated) throw EnumerationLimit("feasible set exceeds the enumeration limit");
    return best;
}

}  // namespace ldp
