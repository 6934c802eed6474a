#include "ldp/reachability.hpp"

#include <stack>

namespace ldp {

Reachability::Reachability(int num_nodes, const std::vector<std::vector<int>>& successors_by_slot,
                           const std::vector<int>& reverse_topological_slots, int dense_limit)
    : num_slots_(num_nodes + 2),
      words_((num_nodes + 2 + 63) / 64),
      dense_(num_nodes <= dense_limit),
      successors_(successors_by_slot) {
    rows_.resize(num_slots_);
    computed_.assign(num_slots_, 0);
    if (!dense_) return;
    for (int s : reverse_topological_slots) {
        Row r(words_, 0);
        r[s / 64] |= std::uint64_t{1} << (s % 64);
        for (int succ : successors_[s]) {
            const Row& other = rows_[succ];
            for (int k = 0; k < words_; ++k) r[k] |= other[k];
        }
        rows_[s] = std::move(r);
        computed_[s] = 1;
    }
}

const Reachability::Row& Reachability::row(int slot) const {
    if (dense_) return rows_[slot];
    std::lock_guard<std::mutex> lock(mutex_);
    if (computed_[slot]) return rows_[slot];
    Row r(words_, 0);
    std::vector<std::uint8_t> seen(num_slots_, 0);
    std::stack<int> todo;
    todo.push(slot);
    seen[slot] = 1;
    while (!todo.empty()) {
        int u = todo.top();
        todo.pop();
        r[u / 64] |= std::uint64_t{1} << (u % 64);
        for (int v : successors_[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (computed_[v]) {
                const Row& other = rows_[v];
                for (int k = 0; k < words_; ++k) r[k] |= other[k];
            } else {
                todo.push(v);
            }
        }
    }
    rows_[slot] = std::move(r);
    computed_[slot] = 1;
    return rows_[slot];
}

bool Reachability::reachable(int from_slot, int to_slot) const {
    const Row& r = row(from_slot);
    return (r[to_slot / 64] >> (to_slot % 64)) & 1U;
}

}  // namespace ldp
