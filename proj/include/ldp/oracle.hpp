#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/solution.hpp"

namespace ldp {

class EnumerationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Enumeration {
    std::vector<FlowSolution> solutions;
    bool truncated = false;
};

// All s-t paths in lexicographic order of their inner-node sequences.
std::vector<std::vector<NodeId>> enumerate_st_paths(const Instance& instance, long limit);

// Visits every feasible solution (every set of node-disjoint s-t paths,
// including the empty set) until `limit` solutions were visited. Returns the
// number visited; `truncated` is set when the limit cut the walk short.
long for_each_feasible(const Instance& instance, long limit, const std::function<void(const FlowSolution&)>& visit,
                       bool* truncated = nullptr);

Enumeration enumerate_feasible(const Instance& instance, long limit);

// Minimum objective; ties go to the lexicographically smallest sorted set of
// active nodes. Throws EnumerationLimit if the walk would exceed `limit`.
FlowSolution brute_force_optimum(const Instance& instance, long limit = 5000000);

}  // namespace ldp
