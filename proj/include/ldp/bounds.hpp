#pragma once

#include <stdexcept>
#include <vector>

#include "ldp/constraints.hpp"
#include "ldp/instance.hpp"

namespace ldp {

class BoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr int default_max_path_len = 8;
constexpr long default_enumeration_budget = 2000000;

// Longest path (in edges) between inner nodes of G ∪ G'.
int longest_witness_path(const Instance& instance);

// Every instantiation of `family` whose witness path has at most
// max_path_len edges. Refuses lengths above 8 and instances whose witness
// paths can be longer than max_path_len. Witnesses that reproduce their own
// lifted edge are skipped.
std::vector<LinearConstraint> enumerate_family(const Instance& instance, Family family,
                                               int max_path_len = default_max_path_len,
                                               long budget = default_enumeration_budget);

// Optimum of the LP over the [0,1] box and the union of the given families.
double lp_bound(const Instance& instance, const std::vector<Family>& families,
                int max_path_len = default_max_path_len, long budget = default_enumeration_budget);

}  // namespace ldp
