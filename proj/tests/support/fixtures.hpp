#pragma once

#include <map>
#include <string>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/linear.hpp"
#include "ldp/solution.hpp"

namespace ldp::testing {

// Small graph with a fractional point, given by named nodes. Nodes without
// incoming edges get an edge from s and nodes without outgoing edges an edge
// to t, carrying the flow needed for conservation.
struct Fixture {
    std::string name;
    Instance instance;
    Point point;
    std::map<std::string, NodeId> nodes;
    int target = 0;  // lifted edge v->w under study

    NodeId node(const std::string& n) const { return nodes.at(n); }
    int lifted(const std::string& u, const std::string& v) const;
    int base(const std::string& u, const std::string& v) const;
};

struct FixtureEdge {
    std::string tail;
    std::string head;
    double value = 0.0;
    double cost = 0.0;
};

Fixture make_fixture(const std::string& name, const std::vector<FixtureEdge>& base,
                     const std::vector<FixtureEdge>& lifted);

// Small graphs with fractional points that separate a weaker family from a stronger one.
Fixture multicut_failure_fixture();      // path vs multicut path inequality
Fixture lifted_path_fixture();           // path vs lifted path inequality
Fixture lifted_cut_fixture();            // path-induced cut vs lifted version
Fixture strengthened_cut_fixture();      // lifted cut vs strengthened version
Fixture symmetric_lifted_fixture();      // forward vs symmetric lifted cut
Fixture symmetric_strengthened_fixture();
Fixture symmetric_plain_fixture();       // forward vs symmetric plain cut

std::vector<Fixture> all_fixtures();

// Best bound on the target variable implied by constraints that contain it,
// evaluated with every other variable fixed at the fixture point.
struct ImpliedBound {
    double lower = -1e300;
    double upper = 1e300;
    int constraints = 0;
};

ImpliedBound implied_bound(const Fixture& fixture, const std::vector<LinearConstraint>& constraints);

}  // namespace ldp::testing
