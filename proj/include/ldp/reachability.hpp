#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "ldp/instance.hpp"

namespace ldp {

// Reflexive reachability over base edges. Node counts up to dense_limit use
// a precomputed bitset matrix; larger graphs compute rows on demand by DFS
// and cache them.
class Reachability {
public:
    static constexpr int default_dense_limit = 4096;

    Reachability(int num_nodes, const std::vector<std::vector<int>>& successors_by_slot,
                 const std::vector<int>& reverse_topological_slots, int dense_limit = default_dense_limit);

    bool reachable(int from_slot, int to_slot) const;
    bool dense() const { return dense_; }
    int num_slots() const { return num_slots_; }

private:
    using Row = std::vector<std::uint64_t>;
    const Row& row(int slot) const;

    int num_slots_ = 0;
    int words_ = 0;
    bool dense_ = true;
    std::vector<std::vector<int>> successors_;
    mutable std::vector<Row> rows_;
    mutable std::vector<std::uint8_t> computed_;
    mutable std::mutex mutex_;
};

// Builds the relation for an instance; same result as instance.reachability().
std::shared_ptr<const Reachability> compute_reachability(const Instance& instance,
                                                         int dense_limit = Reachability::default_dense_limit);

}  // namespace ldp
