#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ldp/instance.hpp"

namespace ldp {

class FlowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary labeling of nodes, base edges and lifted edges.
struct FlowSolution {
    std::vector<std::uint8_t> x;
    std::vector<std::uint8_t> y;
    std::vector<std::uint8_t> y_lifted;
    double objective = 0.0;

    friend bool operator==(const FlowSolution&, const FlowSolution&) = default;
};

// Possibly fractional values for every variable of an instance.
struct Point {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> y_lifted;

    static Point zeros(const Instance& instance);
    static Point from_solution(const FlowSolution& solution);
};

FlowSolution empty_solution(const Instance& instance);

// Throws FlowError when an inner node violates in-flow = x = out-flow.
void check_flow_conservation(const Instance& instance, const std::vector<std::uint8_t>& x,
                             const std::vector<std::uint8_t>& y);

// y'_vw = 1 iff v and w lie on the same active path with v before w.
std::vector<std::uint8_t> lifted_labels_from_flow(const Instance& instance, const std::vector<std::uint8_t>& x,
                                                  const std::vector<std::uint8_t>& y);

double evaluate_objective(const Instance& instance, const FlowSolution& solution);
double evaluate_objective(const Instance& instance, const Point& point);

// Builds a complete solution (lifted labels and objective) from base edge labels.
FlowSolution solution_from_edges(const Instance& instance, const std::vector<std::uint8_t>& y);

// Builds a complete solution from a list of node-disjoint inner-node paths.
FlowSolution solution_from_paths(const Instance& instance, const std::vector<std::vector<NodeId>>& paths);

// Inner-node sequences of the active s-t paths, ordered by their first node.
std::vector<std::vector<NodeId>> active_st_paths(const Instance& instance, const FlowSolution& solution);

// Rounds values within 1e-6 of 0/1; throws FlowError if any value is fractional.
FlowSolution round_integral(const Instance& instance, const Point& point);

}  // namespace ldp
