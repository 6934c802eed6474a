#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/linear.hpp"
#include "ldp/solution.hpp"

namespace ldp {

enum class Family {
    flow,
    single_cut,
    path,
    path_cut,
    lifted_path,
    lifted_path_cut,
    lifted_path_cut_strong,
    sym_path_cut,
    sym_lifted_path_cut,
    sym_lifted_path_cut_strong,
    lifted_flow,
    multicut_path,
};

constexpr int family_count = 12;

const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);
const std::vector<Family>& all_families();

class ConstraintError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EdgeRef {
    bool lifted = false;
    int index = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// A path in G ∪ G' over inner nodes: nodes[i] -> nodes[i+1] uses edges[i].
struct PathWitness {
    std::vector<NodeId> nodes;
    std::vector<EdgeRef> edges;

    NodeId front() const { return nodes.front(); }
    NodeId back() const { return nodes.back(); }
    bool base_only() const;
};

// Uses base edges between consecutive nodes.
PathWitness base_witness(const Instance& instance, const std::vector<NodeId>& nodes);
// Uses lifted edges for the listed step indices and base edges elsewhere.
PathWitness mixed_witness(const Instance& instance, const std::vector<NodeId>& nodes,
                          const std::vector<int>& lifted_steps);
void validate_witness(const Instance& instance, const PathWitness& witness);

enum class CutVariant { plain, lifted, strengthened };
enum class CutSide { out_of_tail, into_head };

// in(v) - x_v = 0 and out(v) - x_v = 0.
std::vector<LinearConstraint> build_flow_conservation(const Instance& instance, NodeId v);
std::vector<LinearConstraint> build_all_flow_conservation(const Instance& instance);

LinearConstraint build_single_node_cut(const Instance& instance, int lifted, CutSide side);

// Witness is a base path from the tail to the head of the lifted edge.
LinearConstraint build_path_inequality(const Instance& instance, int lifted, const PathWitness& witness);
// Witness may use lifted edges.
LinearConstraint build_lifted_path_inequality(const Instance& instance, int lifted, const PathWitness& witness);

// Witness runs from the tail v of the lifted edge vw to some u != w.
LinearConstraint build_path_induced_cut(const Instance& instance, int lifted, const PathWitness& witness,
                                        CutVariant variant);
// Witness runs from some u != v to the head w of the lifted edge vw.
LinearConstraint build_symmetric_cut(const Instance& instance, int lifted, const PathWitness& witness,
                                     CutVariant variant);

// For each node and each other frame: lifted edges towards that frame are
// used at most x_v times. Requires frames.
std::vector<LinearConstraint> build_lifted_flow_inequalities(const Instance& instance);

// Valid only when y' is read as a multicut label; kept for comparisons.
LinearConstraint build_multicut_path_inequality(const Instance& instance, int lifted, const PathWitness& witness);

double value_at(const Point& point, VariableHandle handle);

// max(0, deficit); values within 1e-9 count as satisfied and report 0.
double check_violation(const LinearConstraint& constraint, const Point& point);

// Deduplicates canonical constraints.
class CutPool {
public:
    // Returns false if an identical constraint was already present.
    bool insert(const LinearConstraint& constraint);
    bool contains(const LinearConstraint& constraint) const;
    std::size_t size() const { return keys_.size(); }

private:
    static std::string key(const LinearConstraint& constraint);
    std::unordered_set<std::string> keys_;
};

}  // namespace ldp
