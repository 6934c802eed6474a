#include "ldp/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "ldp/io.hpp"

namespace ldp {

namespace {

struct RawGraph {
    int nodes = 0;
    std::vector<BaseEdge> base;
    std::vector<LiftedEdge> lifted;
};

struct Pruned {
    Instance instance;
    std::vector<int> kept;  // new inner index -> raw index
    int dropped_nodes = 0;
    int dropped_lifted = 0;
};

// Removes raw nodes that are not on any s-t path and lifted pairs without a
// base path between their endpoints.
Pruned prune(const RawGraph& raw) {
    const int n = raw.nodes;
    auto slot = [n](NodeId v) { return v.is_inner() ? v.value : (v.is_source() ? n : n + 1); };
    std::vector<std::vector<int>> succ(n + 2), pred(n + 2);
    for (const auto& e : raw.base) {
        succ[slot(e.tail)].push_back(slot(e.head));
        pred[slot(e.head)].push_back(slot(e.tail));
    }
    auto sweep = [](int start, const std::vector<std::vector<int>>& adj) {
        std::vector<std::uint8_t> seen(adj.size(), 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        return seen;
    };
    auto from_s = sweep(n, succ);
    auto to_t = sweep(n + 1, pred);
    std::vector<int> remap(n, -1), kept;
    for (int v = 0; v < n; ++v)
        if (from_s[v] && to_t[v]) {
            remap[v] = static_cast<int>(kept.size());
            kept.push_back(v);
        }
    auto map_node = [&](NodeId v) { return v.is_inner() ? NodeId::inner(remap[v.value]) : v; };
    auto alive = [&](NodeId v) { return !v.is_inner() || remap[v.value] >= 0; };

    InstanceSpec spec;
    spec.num_nodes = static_cast<int>(kept.size());
    for (const auto& e : raw.base)
        if (alive(e.tail) && alive(e.head)) spec.base_edges.push_back({map_node(e.tail), map_node(e.head), e.cost});
    Instance base_only(spec);
    int dropped_lifted = 0;
    for (const auto& e : raw.lifted) {
        if (!alive(e.tail) || !alive(e.head) || !base_only.reachable(map_node(e.tail), map_node(e.head))) {
            ++dropped_lifted;
            continue;
        }
        spec.lifted_edges.push_back({map_node(e.tail), map_node(e.head), e.cost});
    }
    const int dropped_nodes = n - static_cast<int>(kept.size());
    return Pruned{Instance(std::move(spec)), std::move(kept), dropped_nodes, dropped_lifted};
}

SolveOutcome solve_or_throw(const Instance& instance, const SolveConfig& config) {
    SolveOutcome outcome = solve(instance, config);
    if (outcome.status != SolveStatus::optimal)
        throw SolverLimit(std::string("solver stopped before proving optimality: ") + to_string(outcome.status));
    return outcome;
}

}  // namespace

int McfProblem::node(const std::string& name) {
    auto it = std::find(node_names.begin(), node_names.end(), name);
    if (it != node_names.end()) return static_cast<int>(it - node_names.begin());
    node_names.push_back(name);
    return static_cast<int>(node_names.size()) - 1;
}

void McfProblem::validate() const {
    const int n = static_cast<int>(node_names.size());
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ReductionError("edge refers to an unknown node");
        if (u == v) throw ReductionError("self loop at " + node_names[u]);
        if (!seen.insert({u, v}).second)
            throw ReductionError("duplicate edge " + node_names[u] + " " + node_names[v]);
        succ[u].push_back(v);
        ++indegree[v];
    }
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (indegree[v] == 0) q.push(v);
    int visited = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++visited;
        for (int v : succ[u])
            if (--indegree[v] == 0) q.push(v);
    }
    if (visited != n) throw ReductionError("network has a directed cycle");
    if (pairs.empty()) throw ReductionError("no source/sink pairs");
    for (const auto& p : pairs) {
        if (p.source < 0 || p.source >= n || p.sink < 0 || p.sink >= n)
            throw ReductionError("pair refers to an unknown node");
        if (p.source == p.sink) throw ReductionError("pair with identical source and sink");
        if (p.demand < 1) throw ReductionError("demand must be at least 1");
        for (auto [u, v] : edges) {
            if (v == p.source) throw ReductionError("source " + node_names[p.source] + " has an incoming edge");
            if (u == p.sink) throw ReductionError("sink " + node_names[p.sink] + " has an outgoing edge");
        }
        if (seen.count({p.source, p.sink}))
            throw ReductionError("direct edge " + node_names[p.source] + " " + node_names[p.sink] +
                                 " between a source and its sink is not supported");
    }
}

McfProblem parse_mcf(std::string_view text) {
    McfProblem problem;
    std::vector<std::tuple<std::string, std::string, long long, int, int>> raw_pairs;
    for (const auto& line : tokenize_lines(text)) {
        const std::string& kw = line.tokens[0].text;
        if (kw == "edge") {
            if (line.tokens.size() != 3) throw ParseError(line.number, 1, "'edge' expects 2 arguments");
            int u = problem.node(line.tokens[1].text);
            int v = problem.node(line.tokens[2].text);
            problem.edges.emplace_back(u, v);
        } else if (kw == "pair") {
            if (line.tokens.size() != 4) throw ParseError(line.number, 1, "'pair' expects 3 arguments");
            long long r = parse_int_token(line.tokens[3], line.number);
            if (r < 1) throw ParseError(line.number, line.tokens[3].column, "demand must be at least 1");
            raw_pairs.emplace_back(line.tokens[1].text, line.tokens[2].text, r, line.number, line.tokens[1].column);
        } else {
            throw ParseError(line.number, 1, "unknown directive '" + kw + "'");
        }
    }
    for (const auto& [s, t, r, line, col] : raw_pairs) {
        auto find = [&](const std::string& name) {
            auto it = std::find(problem.node_names.begin(), problem.node_names.end(), name);
            if (it == problem.node_names.end()) throw ParseError(line, col, "pair names unknown node " + name);
            return static_cast<int>(it - problem.node_names.begin());
        };
        problem.pairs.push_back({find(s), find(t), static_cast<int>(r)});
    }
    problem.validate();
    return problem;
}

void CnfFormula::validate() const {
    if (clauses.empty()) throw ReductionError("formula has no clauses");
    for (const auto& c : clauses)
        for (int i = 0; i < 3; ++i) {
            if (c[i] == 0 || std::abs(c[i]) > num_vars) throw ReductionError("literal out of range");
            for (int j = i + 1; j < 3; ++j)
                if (c[i] == -c[j]) throw ReductionError("clause contains a variable and its negation");
        }
}

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool have_header = false;
    long long declared_clauses = 0;
    std::vector<int> current;
    int clause_line = 0;
    for (const auto& line : tokenize_lines(text)) {
        if (line.tokens[0].text == "c") continue;
        if (line.tokens[0].text == "p") {
            if (have_header) throw ParseError(line.number, 1, "duplicate problem line");
            if (line.tokens.size() != 4 || line.tokens[1].text != "cnf")
                throw ParseError(line.number, 1, "expected 'p cnf <vars> <clauses>'");
            long long nv = parse_int_token(line.tokens[2], line.number);
            declared_clauses = parse_int_token(line.tokens[3], line.number);
            if (nv < 1 || declared_clauses < 1) throw ParseError(line.number, 3, "formula must be non-empty");
            f.num_vars = static_cast<int>(nv);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line.number, 1, "clause before 'p cnf' line");
        for (const auto& tok : line.tokens) {
            long long lit = parse_int_token(tok, line.number);
            if (current.empty()) clause_line = line.number;
            if (lit == 0) {
                if (current.size() != 3) throw ParseError(line.number, tok.column, "clause must have exactly 3 literals");
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            if (std::llabs(lit) > f.num_vars) throw ParseError(line.number, tok.column, "literal exceeds variable count");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!have_header) throw ParseError(1, 1, "missing 'p cnf' line");
    if (!current.empty()) throw ParseError(clause_line, 1, "clause not terminated by 0");
    if (static_cast<long long>(f.clauses.size()) != declared_clauses)
        throw ParseError(1, 1, "clause count differs from the problem line");
    f.validate();
    return f;
}

std::string format_dimacs(const CnfFormula& formula) {
    std::string out = "p cnf " + std::to_string(formula.num_vars) + " " + std::to_string(formula.clauses.size()) + "\n";
    for (const auto& c : formula.clauses)
        out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
    return out;
}

McfReduction reduce_mcf(const McfProblem& problem) {
    problem.validate();
    const int m = static_cast<int>(problem.edges.size());
    RawGraph raw;
    std::vector<std::string> labels;
    for (auto [u, v] : problem.edges) labels.push_back("e:" + problem.node_names[u] + "->" + problem.node_names[v]);
    // Line graph: v_ij -> v_jk.
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (problem.edges[a].second == problem.edges[b].first)
                raw.base.push_back({NodeId::inner(a), NodeId::inner(b), 0.0});
    int demand_nodes = 0, total_demand = 0;
    for (std::size_t i = 0; i < problem.pairs.size(); ++i) {
        const auto& p = problem.pairs[i];
        total_demand += p.demand;
        for (int r = 1; r <= p.demand; ++r) {
            NodeId d = NodeId::inner(m + demand_nodes++);
            labels.push_back("d:" + problem.node_names[p.source] + "#" + std::to_string(r));
            raw.base.push_back({NodeId::source(), d, 0.0});
            for (int a = 0; a < m; ++a)
                if (problem.edges[a].first == p.source) raw.base.push_back({d, NodeId::inner(a), 0.0});
        }
    }
    std::set<int> to_sink;
    for (const auto& p : problem.pairs)
        for (int a = 0; a < m; ++a)
            if (problem.edges[a].second == p.sink) to_sink.insert(a);
    for (int a : to_sink) raw.base.push_back({NodeId::inner(a), NodeId::sink(), 0.0});
    std::set<std::pair<int, int>> lifted_pairs;
    for (const auto& p : problem.pairs)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (a != b && problem.edges[a].first == p.source && problem.edges[b].second == p.sink)
                    lifted_pairs.insert({a, b});
    for (auto [a, b] : lifted_pairs) raw.lifted.push_back({NodeId::inner(a), NodeId::inner(b), -1.0});
    raw.nodes = m + demand_nodes;

    Pruned pruned = prune(raw);
    McfReduction out{std::move(pruned.instance), {}, demand_nodes, raw.nodes,
                     static_cast<int>(raw.lifted.size()), pruned.dropped_nodes, pruned.dropped_lifted, total_demand};
    for (int raw_index : pruned.kept) out.node_labels.push_back(labels[raw_index]);
    return out;
}

SatReduction reduce_3sat(const CnfFormula& formula) {
    formula.validate();
    const int k = static_cast<int>(formula.clauses.size());
    RawGraph raw;
    raw.nodes = 3 * k;
    std::vector<std::pair<int, int>> literal_of(raw.nodes);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < 3; ++a) literal_of[3 * i + a] = {i + 1, formula.clauses[i][a]};
    for (int a = 0; a < 3; ++a) raw.base.push_back({NodeId::source(), NodeId::inner(a), 0.0});
    for (int i = 0; i + 1 < k; ++i)
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (formula.clauses[i][a] != -formula.clauses[i + 1][b])
                    raw.base.push_back({NodeId::inner(3 * i + a), NodeId::inner(3 * (i + 1) + b), -1.0});
    for (int a = 0; a < 3; ++a) raw.base.push_back({NodeId::inner(3 * (k - 1) + a), NodeId::sink(), 0.0});
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (formula.clauses[i][a] == -formula.clauses[j][b])
                        raw.lifted.push_back({NodeId::inner(3 * i + a), NodeId::inner(3 * j + b), static_cast<double>(k)});

    Pruned pruned = prune(raw);
    SatReduction out{std::move(pruned.instance), {}, k, raw.nodes, static_cast<int>(raw.lifted.size()),
                     pruned.dropped_nodes, pruned.dropped_lifted};
    for (int raw_index : pruned.kept) out.node_literals.push_back(literal_of[raw_index]);
    return out;
}

McfDecision decide_mcf(const McfProblem& problem, const SolveConfig& config) {
    McfReduction red = reduce_mcf(problem);
    SolveOutcome outcome = solve_or_throw(red.instance, config);
    McfDecision d;
    d.optimum = outcome.solution.objective;
    d.paths = static_cast<int>(active_st_paths(red.instance, outcome.solution).size());
    d.feasible = d.optimum <= -static_cast<double>(red.total_demand) + cost_tolerance;
    return d;
}

SatDecision decide_3sat(const CnfFormula& formula, const SolveConfig& config) {
    SatReduction red = reduce_3sat(formula);
    SolveOutcome outcome = solve_or_throw(red.instance, config);
    SatDecision d;
    d.optimum = outcome.solution.objective;
    const int k = red.clauses;
    d.satisfiable = d.optimum <= -static_cast<double>(k - 1) + cost_tolerance;
    d.assignment.assign(formula.num_vars + 1, -1);
    if (!d.satisfiable) return d;
    auto paths = active_st_paths(red.instance, outcome.solution);
    // Any path of a solution at or below -(k-1) that crosses all k layers
    // without contradiction yields an assignment.
    for (const auto& path : paths) {
        if (static_cast<int>(path.size()) != k) continue;
        std::vector<int> assignment(formula.num_vars + 1, -1);
        bool consistent = true;
        for (NodeId v : path) {
            int lit = red.node_literals[v.value].second;
            int want = lit > 0 ? 1 : 0;
            int& slot = assignment[std::abs(lit)];
            if (slot >= 0 && slot != want) consistent = false;
            slot = want;
        }
        if (consistent) {
            d.assignment = assignment;
            return d;
        }
    }
    if (k == 1) {
        // The empty solution also reaches 0 = -(k-1); any literal of the clause works.
        int lit = formula.clauses[0][0];
        d.assignment[std::abs(lit)] = lit > 0 ? 1 : 0;
        return d;
    }
    throw std::logic_error("no consistent path in a solution below the satisfiability threshold");
}

bool satisfies(const CnfFormula& formula, const std::vector<int>& assignment) {
    for (const auto& c : formula.clauses) {
        bool sat = false;
        for (int lit : c) {
            int v = assignment.at(std::abs(lit));
            if ((lit > 0 && v == 1) || (lit < 0 && v == 0)) sat = true;
        }
        if (!sat) return false;
    }
    return true;
}

}  // namespace ldp
