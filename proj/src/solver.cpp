#include "ldp/solver.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "ldp/lp.hpp"
#include "ldp/mip.hpp"
#include "ldp/separation.hpp"

namespace ldp {

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::round_limit: return "round_limit";
        case SolveStatus::time_limit: return "time_limit";
        case SolveStatus::node_limit: return "node_limit";
    }
    return "?";
}

std::vector<LinearConstraint> initial_constraints(const Instance& instance, bool lifted_flow) {
    std::vector<LinearConstraint> all = build_all_flow_conservation(instance);
    for (int e = 0; e < static_cast<int>(instance.lifted_edges().size()); ++e) {
        all.push_back(build_single_node_cut(instance, e, CutSide::out_of_tail));
        all.push_back(build_single_node_cut(instance, e, CutSide::into_head));
    }
    if (lifted_flow)
        for (auto& c : build_lifted_flow_inequalities(instance)) all.push_back(std::move(c));
    return all;
}

std::vector<double> objective_vector(const Instance& instance) {
    VariableLayout layout = VariableLayout::of(instance);
    std::vector<double> c(layout.size(), 0.0);
    for (int v = 0; v < layout.nodes; ++v) c[v] = instance.node_costs()[v];
    for (int e = 0; e < layout.base; ++e) c[layout.nodes + e] = instance.base_edges()[e].cost;
    for (int e = 0; e < layout.lifted; ++e) c[layout.nodes + layout.base + e] = instance.lifted_edges()[e].cost;
    return c;
}

namespace {

Point point_from_columns(const VariableLayout& layout, const std::vector<double>& values) {
    Point p;
    p.x.assign(values.begin(), values.begin() + layout.nodes);
    p.y.assign(values.begin() + layout.nodes, values.begin() + layout.nodes + layout.base);
    p.y_lifted.assign(values.begin() + layout.nodes + layout.base, values.end());
    return p;
}

std::vector<double> solution_columns(const VariableLayout& layout, const FlowSolution& s) {
    std::vector<double> values;
    values.reserve(layout.size());
    for (auto v : s.x) values.push_back(v);
    for (auto v : s.y) values.push_back(v);
    for (auto v : s.y_lifted) values.push_back(v);
    return values;
}

}  // namespace

SolveOutcome solve(const Instance& instance, const SolveConfig& config) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const VariableLayout layout = VariableLayout::of(instance);
    const bool lifted_flow = config.lifted_flow == LiftedFlowMode::on ||
                             (config.lifted_flow == LiftedFlowMode::automatic && instance.has_frames());

    std::vector<double> objective = objective_vector(instance);
    milp::LpSolver lp(layout.size(), objective, std::vector<double>(layout.size(), 0.0),
                      std::vector<double>(layout.size(), 1.0));
    CutPool pool;
    SolveOutcome outcome;
    {
        std::vector<milp::Row> rows;
        std::vector<LinearConstraint> start_set = initial_constraints(instance, lifted_flow);
        start_set.insert(start_set.end(), config.extra_constraints.begin(), config.extra_constraints.end());
        for (auto& c : start_set) {
            if (!pool.insert(c)) continue;
            if (auto f = family_from_name(c.tag)) ++outcome.cuts_by_family[static_cast<int>(*f)];
            rows.push_back(milp::lower_constraint(layout, c));
            outcome.pool.push_back(std::move(c));
        }
        lp.add_rows(rows);
    }

    outcome.solution = empty_solution(instance);
    outcome.status = SolveStatus::round_limit;
    milp::MipOptions mip_options;
    mip_options.node_limit = config.ilp_node_limit;

    for (int round = 1; round <= config.max_cut_rounds; ++round) {
        double elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (elapsed > config.time_limit_seconds) {
            outcome.status = SolveStatus::time_limit;
            break;
        }
        // Every feasible solution satisfies all valid inequalities, so the best
        // one so far is a feasible incumbent for the master problem.
        mip_options.incumbent = solution_columns(layout, outcome.solution);
        milp::MipResult mip = milp::solve_binary(lp, mip_options);
        outcome.master_nodes += mip.nodes_solved;
        outcome.rounds_used = round;
        if (mip.status == milp::MipStatus::infeasible)
            throw std::logic_error("master problem infeasible although the empty solution is feasible");
        if (mip.status == milp::MipStatus::node_limit) {
            outcome.status = SolveStatus::node_limit;
            outcome.lower_bound = std::max(outcome.lower_bound, mip.best_bound);
            if (mip.has_incumbent) {
                FlowSolution cand = solution_from_edges(instance, round_integral(instance, point_from_columns(layout, mip.values)).y);
                if (cand.objective < outcome.solution.objective) outcome.solution = cand;
            }
            break;
        }

        FlowSolution master = round_integral(instance, point_from_columns(layout, mip.values));
        RoundRecord record;
        record.round = round;
        record.master_objective = master.objective;
        record.master_nodes = mip.nodes_solved;
        outcome.lower_bound = std::max(outcome.lower_bound, master.objective);

        FlowSolution feasible = solution_from_edges(instance, master.y);
        if (feasible.objective < outcome.solution.objective - cost_tolerance) outcome.solution = feasible;

        SeparationReport report = separate_lifted_path(instance, master);
        report.merge(separate_lifted_cut(instance, master, config.include_symmetric));

        std::vector<milp::Row> rows;
        for (const auto& c : report.constraints) {
            if (!pool.insert(c)) continue;
            if (auto f = family_from_name(c.tag)) {
                ++record.cuts_added[static_cast<int>(*f)];
                ++outcome.cuts_by_family[static_cast<int>(*f)];
            }
            rows.push_back(milp::lower_constraint(layout, c));
            outcome.pool.push_back(c);
        }
        outcome.rounds.push_back(record);
        if (config.trace) *config.trace << round_trace_json(record) << '\n';

        if (report.constraints.empty()) {
            outcome.solution = feasible;
            outcome.status = SolveStatus::optimal;
            outcome.lower_bound = feasible.objective;
            break;
        }
        if (rows.empty()) throw std::logic_error("separation returned only constraints already in the master problem");
        lp.add_rows(rows);
    }
    return outcome;
}

Certificate certify(const Instance& instance, const FlowSolution& solution) {
    Certificate cert;
    auto fail = [&cert](VariableHandle h, std::string reason) {
        cert.ok = false;
        cert.issues.push_back({h, std::move(reason)});
    };
    const int n = instance.num_nodes();
    if (static_cast<int>(solution.x.size()) != n || solution.y.size() != instance.base_edges().size() ||
        solution.y_lifted.size() != instance.lifted_edges().size()) {
        cert.ok = false;
        cert.issues.push_back({VariableHandle::node(0), "label vectors do not match the instance"});
        return cert;
    }
    for (int v = 0; v < n; ++v) {
        int in = 0, out = 0;
        for (int e : instance.in_base(NodeId::inner(v))) in += solution.y[e] ? 1 : 0;
        for (int e : instance.out_base(NodeId::inner(v))) out += solution.y[e] ? 1 : 0;
        int xv = solution.x[v] ? 1 : 0;
        if (in != xv || out != xv)
            fail(VariableHandle::node(v), "flow conservation: in " + std::to_string(in) + ", x " +
                                              std::to_string(xv) + ", out " + std::to_string(out));
    }
    // Connectivity under active edges, computed per distinct lifted tail.
    std::vector<std::vector<std::uint8_t>> reach_cache(n);
    auto reached_from = [&](NodeId v) -> const std::vector<std::uint8_t>& {
        auto& seen = reach_cache[v.value];
        if (!seen.empty()) return seen;
        seen.assign(n, 0);
        std::vector<NodeId> stack{v};
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (int e : instance.out_base(u)) {
                if (!solution.y[e]) continue;
                NodeId h = instance.base_edges()[e].head;
                if (h.is_inner() && !seen[h.value]) {
                    seen[h.value] = 1;
                    stack.push_back(h);
                }
            }
        }
        return seen;
    };
    for (int e = 0; e < static_cast<int>(instance.lifted_edges().size()); ++e) {
        const auto& le = instance.lifted_edges()[e];
        bool expected = solution.x[le.tail.value] && reached_from(le.tail)[le.head.value];
        if (static_cast<bool>(solution.y_lifted[e]) != expected)
            fail(VariableHandle::lifted(e), expected ? "endpoints are connected but label is 0"
                                                     : "endpoints are not connected but label is 1");
    }
    return cert;
}

std::string round_trace_json(const RoundRecord& record) {
    nlohmann::ordered_json j;
    j["round"] = record.round;
    j["master_objective"] = record.master_objective;
    j["master_nodes"] = record.master_nodes;
    nlohmann::ordered_json cuts = nlohmann::ordered_json::object();
    for (int i = 0; i < family_count; ++i)
        if (record.cuts_added[i] > 0) cuts[family_name(static_cast<Family>(i))] = record.cuts_added[i];
    j["cuts_added_by_family"] = cuts;
    return j.dump();
}

}  // namespace ldp
