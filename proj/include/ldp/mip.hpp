#pragma once

#include <span>
#include <vector>

#include "ldp/lp.hpp"

namespace ldp::milp {

enum class MipStatus { optimal, infeasible, node_limit };

const char* to_string(MipStatus status);

struct MipOptions {
    long node_limit = 1000000;
    double absolute_gap = 1e-9;
    // Optional starting incumbent; ignored unless it is binary and satisfies
    // every row and column bound.
    std::vector<double> incumbent;
};

struct MipResult {
    MipStatus status = MipStatus::optimal;
    bool has_incumbent = false;
    double objective = 0.0;
    std::vector<double> values;  // exact 0/1 when an incumbent exists
    double best_bound = 0.0;
    long nodes_solved = 0;  // LP relaxations solved
    long branchings = 0;
};

// Best-first branch and bound over the binary columns of `lp`. Branches on
// the most fractional column (lowest index on ties). When every objective
// coefficient is a multiple of a common power-of-two step, nodes that cannot
// improve the incumbent by a full step are pruned. Column bounds are
// restored before returning, and the final basis is kept as a warm start.
MipResult solve_binary(LpSolver& lp, const MipOptions& options = {});

MipResult solve_binary(int num_columns, std::span<const double> objective, std::span<const Row> rows,
                       const MipOptions& options = {});

}  // namespace ldp::milp
