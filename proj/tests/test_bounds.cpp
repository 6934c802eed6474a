#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixtures.hpp"
#include "ldp/bounds.hpp"
#include "ldp/io.hpp"
#include "ldp/oracle.hpp"
#include "random_instances.hpp"

namespace ldp {
namespace {

using testing::Fixture;

NodeId n(int one_based) { return NodeId::inner(one_based - 1); }

// Number of paths from every inner node to `target` in G (or G ∪ G'),
// counted by dynamic programming over the topological order.
std::vector<long> paths_to(const Instance& inst, NodeId target, bool lifted) {
    std::vector<long> count(inst.num_nodes(), 0);
    const auto& topo = inst.topological_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        NodeId v = *it;
        long c = v == target ? 1 : 0;
        for (int e : inst.out_base(v)) {
            NodeId h = inst.base_edges()[e].head;
            if (h.is_inner()) c += count[h.value];
        }
        if (lifted)
            for (int e : inst.out_lifted(v)) c += count[inst.lifted_edges()[e].head.value];
        count[v.value] = c;
    }
    return count;
}

TEST(EnumerateFamily, ChainPathFamilyIsOnePathPerLiftedEdge) {
    Instance inst = parse_instance(
        "ldp 1\nnodes 3\nbase s 1 0\nbase 1 2 0\nbase 2 3 0\nbase 3 t 0\nlift 1 3 -1\nlift 2 3 -1\n");
    auto cs = enumerate_family(inst, Family::path);
    ASSERT_EQ(cs.size(), 2u);
    EXPECT_EQ(dump_constraint(inst, cs[0]),
              dump_constraint(inst, build_path_inequality(inst, 0, base_witness(inst, {n(1), n(2), n(3)}))));
    EXPECT_EQ(dump_constraint(inst, cs[1]),
              dump_constraint(inst, build_path_inequality(inst, 1, base_witness(inst, {n(2), n(3)}))));
}

TEST(EnumerateFamily, LiftedPathFixtureContainsWinningWitness) {
    Fixture f = testing::lifted_path_fixture();
    PathWitness w = mixed_witness(f.instance, {f.node("v"), f.node("v1"), f.node("v4"), f.node("w")}, {1, 2});
    std::string winning = dump_constraint(f.instance, build_lifted_path_inequality(f.instance, f.target, w));
    bool found = false;
    for (const auto& c : enumerate_family(f.instance, Family::lifted_path, 5))
        found = found || dump_constraint(f.instance, c) == winning;
    EXPECT_TRUE(found);
}

TEST(EnumerateFamily, CountsMatchDynamicProgrammingRecount) {
    std::mt19937_64 rng(81);
    testing::RandomInstanceOptions opts;
    opts.max_nodes = 8;
    for (int trial = 0; trial < 40; ++trial) {
        Instance inst = testing::random_instance(rng, opts);
        long path = 0, lifted_path = 0, path_cut = 0;
        for (const auto& le : inst.lifted_edges()) {
            path += paths_to(inst, le.head, false)[le.tail.value];
            lifted_path += paths_to(inst, le.head, true)[le.tail.value] - 1;
            for (int u = 0; u < inst.num_nodes(); ++u) {
                NodeId un = NodeId::inner(u);
                if (un != le.head && inst.reachable(un, le.head)) path_cut += paths_to(inst, un, false)[le.tail.value];
            }
        }
        EXPECT_EQ(static_cast<long>(enumerate_family(inst, Family::path).size()), path);
        EXPECT_EQ(static_cast<long>(enumerate_family(inst, Family::lifted_path).size()), lifted_path);
        EXPECT_EQ(static_cast<long>(enumerate_family(inst, Family::path_cut).size()), path_cut);
        EXPECT_EQ(enumerate_family(inst, Family::single_cut).size(), 2 * inst.lifted_edges().size());
    }
}

TEST(EnumerateFamily, RefusesLongPathsAndBudgetOverflow) {
    Instance inst = parse_instance(
        "ldp 1\nnodes 4\nbase s 1 0\nbase 1 2 0\nbase 2 3 0\nbase 3 4 0\nbase 4 t 0\nlift 1 4 -1\n");
    EXPECT_THROW(enumerate_family(inst, Family::path, 9), BoundError);
    EXPECT_THROW(enumerate_family(inst, Family::path, -1), BoundError);
    EXPECT_THROW(enumerate_family(inst, Family::path, 2), BoundError);
    EXPECT_NO_THROW(enumerate_family(inst, Family::path, 3));
    EXPECT_NO_THROW(enumerate_family(inst, Family::single_cut, 0));
    EXPECT_THROW(enumerate_family(inst, Family::path_cut, 8, 2), BoundError);
    EXPECT_THROW(lp_bound(inst, {Family::path_cut}, 8, 2), BoundError);
}

// Nested family sets, from the flow polytope up to every family.
std::vector<std::vector<Family>> nested_family_sets() {
    const std::vector<Family> order{Family::flow,
                                    Family::single_cut,
                                    Family::path,
                                    Family::path_cut,
                                    Family::lifted_path,
                                    Family::lifted_path_cut,
                                    Family::lifted_path_cut_strong,
                                    Family::sym_path_cut,
                                    Family::sym_lifted_path_cut,
                                    Family::sym_lifted_path_cut_strong,
                                    Family::lifted_flow};
    std::vector<std::vector<Family>> out;
    std::vector<Family> current;
    for (Family f : order) {
        current.push_back(f);
        out.push_back(current);
    }
    return out;
}

TEST(LpBound, MonotoneInFamilySetAndBelowOptimumOnFixtures) {
    for (const auto& f : testing::all_fixtures()) {
        SCOPED_TRACE(f.name);
        double optimum = brute_force_optimum(f.instance).objective;
        double previous = -1e300;
        for (const auto& set : nested_family_sets()) {
            double b = lp_bound(f.instance, set);
            EXPECT_GE(b, previous - 1e-9);
            EXPECT_LE(b, optimum + 1e-9);
            previous = b;
        }
    }
}

TEST(LpBound, MonotoneAndBelowOptimumOnRandomInstances) {
    std::mt19937_64 rng(82);
    testing::RandomInstanceOptions opts;
    opts.max_nodes = 7;
    opts.frames = true;
    for (int trial = 0; trial < 25; ++trial) {
        Instance inst = testing::random_instance(rng, opts);
        double optimum = brute_force_optimum(inst).objective;
        double previous = -1e300;
        for (const auto& set : nested_family_sets()) {
            double b = lp_bound(inst, set);
            EXPECT_GE(b, previous - 1e-9);
            EXPECT_LE(b, optimum + 1e-9);
            previous = b;
        }
    }
}

TEST(LpBound, ChainWithAllFamiliesEqualsIlpOptimum) {
    Instance inst = parse_instance(
        "ldp 1\nnodes 4\nbase s 1 0\nbase 1 2 -1\nbase 2 3 0.5\nbase 3 4 -1\nbase 4 t 0\nbase s 3 0\nbase 2 t 0\n"
        "lift 1 3 1.5\nlift 2 4 -0.5\nlift 1 4 0.5\n");
    EXPECT_NEAR(lp_bound(inst, all_families()), brute_force_optimum(inst).objective, 1e-9);
}

TEST(LpBound, NeedsFlowConservationToBeBounded) {
    Instance inst = parse_instance("ldp 1\nnodes 1\nbase s 1 -1\nbase 1 t 0\n");
    EXPECT_EQ(lp_bound(inst, {}), -1.0);  // box only: y_s1 = 1 alone
    EXPECT_EQ(lp_bound(inst, {Family::flow}), -1.0);
}

// Point membership per fixture: the point satisfies every enumerated
// constraint of the weaker families and violates some constraint of the
// stronger family.
struct Membership {
    Fixture fixture;
    std::vector<Family> weaker;
    Family stronger;
};

TEST(LpBound, FixturePointsSeparateWeakerFromStrongerFamilies) {
    std::vector<Membership> cases{
        {testing::multicut_failure_fixture(), {Family::multicut_path}, Family::path},
        {testing::lifted_path_fixture(), {Family::flow, Family::single_cut, Family::path}, Family::lifted_path},
        {testing::lifted_cut_fixture(), {Family::flow, Family::single_cut, Family::path_cut}, Family::lifted_path_cut},
        {testing::strengthened_cut_fixture(),
         {Family::flow, Family::single_cut, Family::path_cut, Family::lifted_path_cut},
         Family::lifted_path_cut_strong},
        {testing::symmetric_lifted_fixture(),
         {Family::flow, Family::single_cut, Family::path_cut, Family::lifted_path_cut, Family::lifted_path_cut_strong},
         Family::sym_lifted_path_cut},
        {testing::symmetric_strengthened_fixture(),
         {Family::flow, Family::single_cut, Family::path_cut, Family::lifted_path_cut, Family::lifted_path_cut_strong,
          Family::sym_path_cut, Family::sym_lifted_path_cut},
         Family::sym_lifted_path_cut_strong},
        {testing::symmetric_plain_fixture(), {Family::flow, Family::single_cut, Family::path_cut},
         Family::sym_path_cut},
    };
    for (const auto& m : cases) {
        SCOPED_TRACE(m.fixture.name);
        for (Family fam : m.weaker)
            for (const auto& c : enumerate_family(m.fixture.instance, fam))
                EXPECT_EQ(check_violation(c, m.fixture.point), 0.0) << dump_constraint(m.fixture.instance, c);
        double worst = 0.0;
        for (const auto& c : enumerate_family(m.fixture.instance, m.stronger))
            worst = std::max(worst, check_violation(c, m.fixture.point));
        EXPECT_EQ(worst, 1.0);
    }
}

}  // namespace
}  // namespace ldp
