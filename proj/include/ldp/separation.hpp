#pragma once

#include <array>
#include <vector>

#include "ldp/constraints.hpp"
#include "ldp/instance.hpp"
#include "ldp/solution.hpp"

namespace ldp {

// Active s-t paths of an integral flow with O(1) membership lookups.
struct ActivePaths {
    std::vector<std::vector<NodeId>> paths;
    std::vector<int> path_of;   // per inner node, -1 if inactive
    std::vector<int> position;  // index on its path
    long active_edges = 0;      // |E^1|

    static ActivePaths build(const Instance& instance, const FlowSolution& master);
};

struct SeparationReport {
    std::vector<LinearConstraint> constraints;
    std::array<int, family_count> by_family{};
    long lifted_inspected = 0;
    long path_nodes_scanned = 0;
    long witness_steps = 0;  // proportional to the size of the emitted witnesses
    long active_edges = 0;
    long lifted_edges = 0;

    long scan_work() const { return lifted_inspected + path_nodes_scanned; }
    std::size_t size() const { return constraints.size(); }
    void add(LinearConstraint constraint);
    void merge(SeparationReport other);
};

// Walks the subpath from `from` to `to` of one active path backwards and
// replaces stretches by correctly labelled lifted edges where possible.
PathWitness extract_path(const Instance& instance, const ActivePaths& active, const FlowSolution& master,
                         NodeId from, NodeId to, long* steps = nullptr);
// Same walk in the forward direction, used for witnesses that end at the head.
PathWitness extract_path_forward(const Instance& instance, const ActivePaths& active, const FlowSolution& master,
                                 NodeId from, NodeId to, long* steps = nullptr);

// Lifted edges joining two nodes of one active path in order but labelled 0.
// `master` must be integral and satisfy flow conservation.
SeparationReport separate_lifted_path(const Instance& instance, const FlowSolution& master);

// Lifted edges labelled 1 whose endpoints are not on one active path.
SeparationReport separate_lifted_cut(const Instance& instance, const FlowSolution& master, bool include_symmetric);

}  // namespace ldp
