#include "ldp/instance.hpp"

#include <queue>

#include "ldp/reachability.hpp"

namespace ldp {

namespace {

std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

std::vector<int> reverse_topological_slots(const Instance& inst) {
    std::vector<int> order;
    order.reserve(inst.num_slots());
    order.push_back(inst.slot(NodeId::sink()));
    const auto& topo = inst.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) order.push_back(it->value);
    order.push_back(inst.slot(NodeId::source()));
    return order;
}

std::vector<std::vector<int>> successor_slots(const Instance& inst) {
    std::vector<std::vector<int>> succ(inst.num_slots());
    for (const auto& e : inst.base_edges()) succ[inst.slot(e.tail)].push_back(inst.slot(e.head));
    return succ;
}

}  // namespace

std::string to_string(NodeId node) {
    if (node.is_source()) return "s";
    if (node.is_sink()) return "t";
    return std::to_string(node.value + 1);
}

Instance::Instance(InstanceSpec spec)
    : num_nodes_(spec.num_nodes),
      base_(std::move(spec.base_edges)),
      lifted_(std::move(spec.lifted_edges)),
      node_costs_(std::move(spec.node_costs)),
      frames_(std::move(spec.frames)) {
    const int n = num_nodes_;
    if (n < 0) throw InstanceError("negative node count");
    if (node_costs_.empty()) node_costs_.assign(n, 0.0);
    if (static_cast<int>(node_costs_.size()) != n) throw InstanceError("node cost vector has wrong length");
    if (frames_) {
        if (static_cast<int>(frames_->size()) != n) throw InstanceError("frame map must cover every inner node");
        for (int v = 0; v < n; ++v)
            if ((*frames_)[v] <= 0) throw InstanceError("frame of node " + std::to_string(v + 1) + " is not positive");
    }

    auto check_inner = [n](NodeId v, const char* what) {
        if (v.is_inner() && v.value >= n)
            throw InstanceError(std::string(what) + " refers to unknown node " + to_string(v));
    };

    out_base_.assign(n + 2, {});
    in_base_.assign(n + 2, {});
    out_lifted_.assign(n, {});
    in_lifted_.assign(n, {});

    for (int i = 0; i < static_cast<int>(base_.size()); ++i) {
        const auto& e = base_[i];
        check_inner(e.tail, "base edge");
        check_inner(e.head, "base edge");
        if (e.tail.is_sink() || e.head.is_source())
            throw InstanceError("base edge " + to_string(e.tail) + "->" + to_string(e.head) + " has wrong orientation");
        if (e.tail.is_source() && e.head.is_sink()) throw InstanceError("base edge s->t is not allowed");
        if (e.tail == e.head) throw InstanceError("self loop on node " + to_string(e.tail));
        if (!base_index_.emplace(pair_key(slot(e.tail), slot(e.head)), i).second)
            throw InstanceError("duplicate base edge " + to_string(e.tail) + "->" + to_string(e.head));
        out_base_[slot(e.tail)].push_back(i);
        in_base_[slot(e.head)].push_back(i);
    }
    for (int i = 0; i < static_cast<int>(lifted_.size()); ++i) {
        const auto& e = lifted_[i];
        if (!e.tail.is_inner() || !e.head.is_inner())
            throw InstanceError("lifted edge " + to_string(e.tail) + "->" + to_string(e.head) +
                                " must join inner nodes");
        check_inner(e.tail, "lifted edge");
        check_inner(e.head, "lifted edge");
        if (e.tail == e.head) throw InstanceError("lifted self loop on node " + to_string(e.tail));
        if (!lifted_index_.emplace(pair_key(e.tail.value, e.head.value), i).second)
            throw InstanceError("duplicate lifted edge " + to_string(e.tail) + "->" + to_string(e.head));
        out_lifted_[e.tail.value].push_back(i);
        in_lifted_[e.head.value].push_back(i);
    }

    // Kahn's algorithm over inner nodes; source and sink cannot sit on a cycle.
    std::vector<int> indegree(n, 0);
    for (const auto& e : base_)
        if (e.tail.is_inner() && e.head.is_inner()) ++indegree[e.head.value];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(v);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        topo_.push_back(NodeId::inner(v));
        for (int ei : out_base_[v]) {
            NodeId h = base_[ei].head;
            if (h.is_inner() && --indegree[h.value] == 0) ready.push(h.value);
        }
    }
    if (static_cast<int>(topo_.size()) != n) {
        for (int v = 0; v < n; ++v)
            if (indegree[v] > 0) throw InstanceError("base graph has a cycle through node " + std::to_string(v + 1));
    }

    reach_ = compute_reachability(*this);
    for (int v = 0; v < n; ++v) {
        if (!reachable(NodeId::source(), NodeId::inner(v)))
            throw InstanceError("node " + std::to_string(v + 1) + " is unreachable from s");
        if (!reachable(NodeId::inner(v), NodeId::sink()))
            throw InstanceError("node " + std::to_string(v + 1) + " does not reach t");
    }
    for (const auto& e : lifted_)
        if (!reachable(e.tail, e.head))
            throw InstanceError("lifted edge " + to_string(e.tail) + "->" + to_string(e.head) +
                                " joins nodes with no base path");
    if (frames_) {
        auto check_forward = [this](NodeId u, NodeId v, const char* what) {
            if (u.is_inner() && v.is_inner() && frame(u) >= frame(v))
                throw InstanceError(std::string(what) + " " + to_string(u) + "->" + to_string(v) +
                                    " does not go forward in time");
        };
        for (const auto& e : base_) check_forward(e.tail, e.head, "base edge");
        for (const auto& e : lifted_) check_forward(e.tail, e.head, "lifted edge");
    }
}

std::optional<int> Instance::find_base_edge(NodeId u, NodeId v) const {
    auto it = base_index_.find(pair_key(slot(u), slot(v)));
    if (it == base_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Instance::find_lifted_edge(NodeId u, NodeId v) const {
    if (!u.is_inner() || !v.is_inner()) return std::nullopt;
    auto it = lifted_index_.find(pair_key(u.value, v.value));
    if (it == lifted_index_.end()) return std::nullopt;
    return it->second;
}

bool Instance::reachable(NodeId u, NodeId v) const { return reach_->reachable(slot(u), slot(v)); }

InstanceSpec Instance::to_spec() const {
    InstanceSpec spec;
    spec.num_nodes = num_nodes_;
    spec.base_edges = base_;
    spec.lifted_edges = lifted_;
    spec.node_costs = node_costs_;
    spec.frames = frames_;
    return spec;
}

std::shared_ptr<const Reachability> compute_reachability(const Instance& instance, int dense_limit) {
    return std::make_shared<Reachability>(instance.num_nodes(), successor_slots(instance),
                                          reverse_topological_slots(instance), dense_limit);
}

}  // namespace ldp
