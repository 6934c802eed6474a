#include "fixtures.hpp"

#include <cmath>
#include <stdexcept>

#include "ldp/constraints.hpp"

namespace ldp::testing {

int Fixture::lifted(const std::string& u, const std::string& v) const {
    auto e = instance.find_lifted_edge(node(u), node(v));
    if (!e) throw std::out_of_range("fixture has no lifted edge " + u + "->" + v);
    return *e;
}

int Fixture::base(const std::string& u, const std::string& v) const {
    auto e = instance.find_base_edge(u == "s" ? NodeId::source() : node(u), v == "t" ? NodeId::sink() : node(v));
    if (!e) throw std::out_of_range("fixture has no base edge " + u + "->" + v);
    return *e;
}

Fixture make_fixture(const std::string& name, const std::vector<FixtureEdge>& base,
                     const std::vector<FixtureEdge>& lifted) {
    std::map<std::string, NodeId> ids;
    std::vector<std::string> order;
    auto id = [&](const std::string& n) {
        auto it = ids.find(n);
        if (it != ids.end()) return it->second;
        NodeId v = NodeId::inner(static_cast<int>(order.size()));
        ids.emplace(n, v);
        order.push_back(n);
        return v;
    };
    for (const auto& e : base) {
        id(e.tail);
        id(e.head);
    }
    const int n = static_cast<int>(order.size());
    std::vector<double> in(n, 0.0), out(n, 0.0);
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    InstanceSpec spec;
    spec.num_nodes = n;
    std::vector<double> base_values;
    for (const auto& e : base) {
        NodeId u = ids.at(e.tail), v = ids.at(e.head);
        spec.base_edges.push_back({u, v, e.cost});
        base_values.push_back(e.value);
        out[u.value] += e.value;
        in[v.value] += e.value;
        ++outdeg[u.value];
        ++indeg[v.value];
    }
    std::vector<double> x(n, 0.0);
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            spec.base_edges.push_back({NodeId::source(), NodeId::inner(v), 0.0});
            base_values.push_back(out[v]);
            in[v] = out[v];
        }
        if (outdeg[v] == 0) {
            spec.base_edges.push_back({NodeId::inner(v), NodeId::sink(), 0.0});
            base_values.push_back(in[v]);
            out[v] = in[v];
        }
        if (std::abs(in[v] - out[v]) > 1e-12)
            throw std::logic_error(name + ": fixture point violates flow conservation at " + order[v]);
        x[v] = in[v];
    }
    std::vector<double> lifted_values;
    for (const auto& e : lifted) {
        spec.lifted_edges.push_back({id(e.tail), id(e.head), e.cost});
        lifted_values.push_back(e.value);
    }
    Fixture f{name, Instance(std::move(spec)), {}, ids, 0};
    f.point.x = x;
    f.point.y = base_values;
    f.point.y_lifted = lifted_values;
    f.target = f.lifted("v", "w");
    return f;
}

Fixture multicut_failure_fixture() {
    return make_fixture("multicut-failure",
                        {{"v", "v1", .5}, {"v1", "v2", .5}, {"v2", "v3", .5}, {"v3", "v4", .5}, {"v4", "w", 1},
                         {"v1", "v5", 0}, {"v4", "v6", 0}, {"v", "v2", .5}, {"v2", "v4", .5}},
                        {{"v", "w", 0, -1}});
}

Fixture lifted_path_fixture() {
    return make_fixture("lifted-path",
                        {{"v", "v1", 1}, {"v1", "v2", .5}, {"v1", "v3", .5}, {"v2", "v4", .5}, {"v3", "v4", .5},
                         {"v4", "v5", .5}, {"v4", "v6", .5}, {"v5", "w", .5}, {"v6", "w", .5}},
                        {{"v1", "v4", 1, 0}, {"v4", "w", 1, 0}, {"v", "w", 0, -1}});
}

Fixture lifted_cut_fixture() {
    return make_fixture("lifted-cut",
                        {{"v1", "v2", .5}, {"v2", "u2", .5}, {"v3", "u2", .5}, {"v", "v3", .5}, {"v3", "u1", .5},
                         {"u1", "wt", 1}, {"u1", "w", 0}, {"v2", "u1", .5}, {"u2", "wt", 0}, {"v", "v2", .5},
                         {"v1", "v3", .5}, {"u2", "w", 1}},
                        {{"v", "u1", 1, 0}, {"v1", "u2", 1, 0}, {"v", "w", 1, -1}});
}

Fixture strengthened_cut_fixture() {
    return make_fixture("strengthened-cut",
                        {{"v1", "v2", 1}, {"v2", "u2", .5}, {"v3", "u2", .5}, {"v", "v3", 1}, {"v3", "u1", .5},
                         {"u1", "wt", .5}, {"u1", "w", .5}, {"v2", "u1", .5}, {"u2", "wt", .5}, {"v", "v2", 0},
                         {"v1", "v3", 0}, {"u2", "w", .5}},
                        {{"v3", "w", 0, 0}, {"v", "w", 1, -1}});
}

Fixture symmetric_lifted_fixture() {
    return make_fixture("symmetric-lifted",
                        {{"v1", "u2", 1}, {"u2", "v2", .5}, {"u1", "v2", .5}, {"v", "u1", 1}, {"u1", "v3", .5},
                         {"v3", "wt", .5}, {"v3", "w", .5}, {"u2", "v3", .5}, {"v2", "wt", .5}, {"v", "u2", 0},
                         {"v1", "u1", 0}, {"v2", "w", .5}},
                        {{"u1", "wt", 1, 0}, {"u2", "w", 1, 0}, {"v", "w", 1, -1}});
}

Fixture symmetric_strengthened_fixture() {
    return make_fixture("symmetric-strengthened",
                        {{"v1", "v2", .5}, {"v2", "u", .5}, {"v3", "u", .5}, {"v", "v3", .5}, {"v3", "v4", .5},
                         {"v4", "wt", 1}, {"v4", "w", 0}, {"v2", "v4", .5}, {"u", "wt", 0}, {"v", "v2", .5},
                         {"v1", "v3", .5}, {"u", "w", 1}},
                        {{"v", "u", 0, 0}, {"v", "w", 1, -1}});
}

Fixture symmetric_plain_fixture() {
    return make_fixture("symmetric-plain",
                        {{"vt", "v1", 1}, {"vt", "v2", 0}, {"v1", "v4", 1}, {"v2", "v4", 0}, {"v4", "v6", 1},
                         {"v4", "v7", 0}, {"v6", "w", 1}, {"v7", "w", 0}, {"v", "v3", .5}, {"v", "v2", .5},
                         {"v3", "v5", .5}, {"v2", "v5", .5}, {"v5", "v7", .5}, {"v5", "v8", .5}, {"v7", "wt", .5},
                         {"v8", "wt", .5}, {"v3", "v4", 0}, {"v8", "w", 0}},
                        {{"v", "w", 1, -1}});
}

std::vector<Fixture> all_fixtures() {
    return {multicut_failure_fixture(), lifted_path_fixture(),           lifted_cut_fixture(),
            strengthened_cut_fixture(), symmetric_lifted_fixture(),      symmetric_strengthened_fixture(),
            symmetric_plain_fixture()};
}

ImpliedBound implied_bound(const Fixture& fixture, const std::vector<LinearConstraint>& constraints) {
    ImpliedBound b;
    const VariableHandle target = VariableHandle::lifted(fixture.target);
    for (const auto& c : constraints) {
        double a = 0.0, rest = 0.0;
        for (const Term& t : c.terms) {
            if (t.var == target) a += t.coeff;
            else rest += t.coeff * value_at(fixture.point, t.var);
        }
        if (a == 0.0) continue;
        ++b.constraints;
        double bound = (c.rhs - rest) / a;
        bool is_upper = (c.sense == Sense::less_equal) == (a > 0);
        if (c.sense == Sense::equal) {
            b.lower = std::max(b.lower, bound);
            b.upper = std::min(b.upper, bound);
        } else if (is_upper) {
            b.upper = std::min(b.upper, bound);
        } else {
            b.lower = std::max(b.lower, bound);
        }
    }
    return b;
}

}  // namespace ldp::testing
