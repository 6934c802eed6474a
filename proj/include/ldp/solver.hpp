#pragma once

#include <array>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldp/constraints.hpp"
#include "ldp/instance.hpp"
#include "ldp/linear.hpp"
#include "ldp/solution.hpp"

namespace ldp {

enum class LiftedFlowMode { automatic, on, off };

struct SolveConfig {
    int max_cut_rounds = 100;
    long ilp_node_limit = 1000000;  // per master solve
    bool include_symmetric = true;
    LiftedFlowMode lifted_flow = LiftedFlowMode::automatic;
    double time_limit_seconds = std::numeric_limits<double>::infinity();
    std::ostream* trace = nullptr;  // JSON lines, one per round
    // Added to the initial constraint set, e.g. the pool of an earlier run.
    std::vector<LinearConstraint> extra_constraints;
};

enum class SolveStatus { optimal, round_limit, time_limit, node_limit };

// Raised by callers that need a proven optimum when the solver stopped early.
class SolverLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const char* to_string(SolveStatus status);

struct RoundRecord {
    int round = 0;
    double master_objective = 0.0;
    long master_nodes = 0;
    std::array<int, family_count> cuts_added{};
};

struct SolveOutcome {
    FlowSolution solution;  // best feasible solution found
    SolveStatus status = SolveStatus::optimal;
    int rounds_used = 0;
    double lower_bound = -std::numeric_limits<double>::infinity();
    std::vector<RoundRecord> rounds;
    std::array<int, family_count> cuts_by_family{};  // including the initial constraints
    long master_nodes = 0;
    std::vector<LinearConstraint> pool;  // every constraint of the final master problem
};

// Initial constraint set: flow conservation, single node cuts on both sides
// of every lifted edge, and lifted flow inequalities when enabled.
std::vector<LinearConstraint> initial_constraints(const Instance& instance, bool lifted_flow);
std::vector<double> objective_vector(const Instance& instance);

SolveOutcome solve(const Instance& instance, const SolveConfig& config = {});

struct CertifyIssue {
    VariableHandle variable;
    std::string reason;
};

struct Certificate {
    bool ok = true;
    std::vector<CertifyIssue> issues;
};

// Checks flow conservation at every inner node and that each lifted label
// equals path connectivity of its endpoints under the active base edges.
Certificate certify(const Instance& instance, const FlowSolution& solution);

std::string round_trace_json(const RoundRecord& record);

}  // namespace ldp
