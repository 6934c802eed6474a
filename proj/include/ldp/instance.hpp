#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace ldp {

constexpr double cost_tolerance = 1e-9;

// Inner nodes are 0..N-1 internally and 1..N in files and dumps.
struct NodeId {
    std::int32_t value = 0;

    static constexpr NodeId source() { return NodeId{-1}; }
    static constexpr NodeId sink() { return NodeId{-2}; }
    static constexpr NodeId inner(std::int32_t index) { return NodeId{index}; }

    constexpr bool is_source() const { return value == -1; }
    constexpr bool is_sink() const { return value == -2; }
    constexpr bool is_inner() const { return value >= 0; }

    friend constexpr bool operator==(NodeId a, NodeId b) { return a.value == b.value; }
    friend constexpr bool operator!=(NodeId a, NodeId b) { return a.value != b.value; }
    friend constexpr bool operator<(NodeId a, NodeId b) { return a.value < b.value; }
};

std::string to_string(NodeId node);

struct BaseEdge {
    NodeId tail;
    NodeId head;
    double cost = 0.0;
};

struct LiftedEdge {
    NodeId tail;
    NodeId head;
    double cost = 0.0;
};

class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Reachability;

// Raw description of an instance before validation.
struct InstanceSpec {
    int num_nodes = 0;
    std::vector<BaseEdge> base_edges;
    std::vector<LiftedEdge> lifted_edges;
    std::vector<double> node_costs;  // empty means all zero
    std::optional<std::vector<int>> frames;
};

// Validated, immutable lifted disjoint paths instance. Copies share the
// reachability relation.
class Instance {
public:
    explicit Instance(InstanceSpec spec);

    int num_nodes() const { return num_nodes_; }
    int num_slots() const { return num_nodes_ + 2; }
    const std::vector<BaseEdge>& base_edges() const { return base_; }
    const std::vector<LiftedEdge>& lifted_edges() const { return lifted_; }
    const std::vector<double>& node_costs() const { return node_costs_; }
    const std::optional<std::vector<int>>& frames() const { return frames_; }
    bool has_frames() const { return frames_.has_value(); }
    int frame(NodeId v) const { return (*frames_)[v.value]; }

    // Slot index used by adjacency arrays: inner v -> v, source -> N, sink -> N+1.
    int slot(NodeId v) const {
        if (v.is_inner()) return v.value;
        return v.is_source() ? num_nodes_ : num_nodes_ + 1;
    }
    NodeId node_at_slot(int slot) const {
        if (slot < num_nodes_) return NodeId::inner(slot);
        return slot == num_nodes_ ? NodeId::source() : NodeId::sink();
    }

    const std::vector<int>& out_base(NodeId v) const { return out_base_[slot(v)]; }
    const std::vector<int>& in_base(NodeId v) const { return in_base_[slot(v)]; }
    const std::vector<int>& out_lifted(NodeId v) const { return out_lifted_[v.value]; }
    const std::vector<int>& in_lifted(NodeId v) const { return in_lifted_[v.value]; }

    std::optional<int> find_base_edge(NodeId u, NodeId v) const;
    std::optional<int> find_lifted_edge(NodeId u, NodeId v) const;

    // Inner nodes in a topological order of the base graph.
    const std::vector<NodeId>& topological_order() const { return topo_; }

    const Reachability& reachability() const { return *reach_; }
    bool reachable(NodeId u, NodeId v) const;

    InstanceSpec to_spec() const;

private:
    int num_nodes_ = 0;
    std::vector<BaseEdge> base_;
    std::vector<LiftedEdge> lifted_;
    std::vector<double> node_costs_;
    std::optional<std::vector<int>> frames_;
    std::vector<std::vector<int>> out_base_, in_base_, out_lifted_, in_lifted_;
    std::unordered_map<std::uint64_t, int> base_index_, lifted_index_;
    std::vector<NodeId> topo_;
    std::shared_ptr<const Reachability> reach_;
};

}  // namespace ldp
