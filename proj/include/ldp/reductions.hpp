#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/solver.hpp"

namespace ldp {

class ReductionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Unit-capacity network with source/sink pairs and integer demands.
struct McfProblem {
    struct Pair {
        int source = 0;
        int sink = 0;
        int demand = 1;
    };
    std::vector<std::string> node_names;
    std::vector<std::pair<int, int>> edges;
    std::vector<Pair> pairs;

    int node(const std::string& name);  // adds the node if it is new
    void validate() const;
};

McfProblem parse_mcf(std::string_view text);

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;  // DIMACS literals: +v / -v

    void validate() const;
};

CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& formula);

// Nodes of the construction that lie on no s-t path are removed so that the
// result is a valid instance; lifted pairs left without a base path are
// dropped. Both are counted.
struct McfReduction {
    Instance instance;
    std::vector<std::string> node_labels;  // per inner node
    int demand_nodes = 0;
    int constructed_nodes = 0;
    int constructed_lifted = 0;
    int dropped_nodes = 0;
    int dropped_lifted = 0;
    int total_demand = 0;
};

McfReduction reduce_mcf(const McfProblem& problem);

struct SatReduction {
    Instance instance;
    std::vector<std::pair<int, int>> node_literals;  // (layer starting at 1, DIMACS literal)
    int clauses = 0;
    int constructed_nodes = 0;
    int constructed_lifted = 0;
    int dropped_nodes = 0;
    int dropped_lifted = 0;
};

SatReduction reduce_3sat(const CnfFormula& formula);

struct McfDecision {
    bool feasible = false;
    double optimum = 0.0;
    int paths = 0;
};

McfDecision decide_mcf(const McfProblem& problem, const SolveConfig& config = {});

struct SatDecision {
    bool satisfiable = false;
    double optimum = 0.0;
    // Per variable 1..n (index 0 unused): 1 true, 0 false, -1 unconstrained.
    std::vector<int> assignment;
};

SatDecision decide_3sat(const CnfFormula& formula, const SolveConfig& config = {});

bool satisfies(const CnfFormula& formula, const std::vector<int>& assignment);

}  // namespace ldp
