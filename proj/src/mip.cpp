#include "ldp/mip.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace ldp::milp {

const char* to_string(MipStatus status) {
    switch (status) {
        case MipStatus::optimal: return "optimal";
        case MipStatus::infeasible: return "infeasible";
        case MipStatus::node_limit: return "node_limit";
    }
    return "?";
}

namespace {

struct Node {
    double bound = -infinity;
    int depth = 0;
    long id = 0;
    std::vector<std::pair<int, std::uint8_t>> fixes;
};

struct NodeOrder {
    // priority_queue keeps the "largest" on top, so answer "a is worse than b".
    bool operator()(const Node& a, const Node& b) const {
        if (std::abs(a.bound - b.bound) > 1e-9) return a.bound > b.bound;
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.id < b.id;
    }
};

// Largest step 2^-k (k <= 10, step <= 1) dividing every coefficient, or 0.
double objective_step(const std::vector<double>& cost) {
    for (double step = 1.0; step >= 1.0 / 1024; step /= 2) {
        bool divides = true;
        for (double c : cost) {
            double q = c / step;
            if (std::abs(q - std::round(q)) > 1e-12) {
                divides = false;
                break;
            }
        }
        if (divides) return step;
    }
    return 0.0;
}

bool admissible(const LpSolver& lp, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != lp.num_columns()) return false;
    for (int j = 0; j < lp.num_columns(); ++j)
        if ((x[j] != 0.0 && x[j] != 1.0) || x[j] < lp.lower(j) || x[j] > lp.upper(j)) return false;
    for (const auto& row : lp.rows()) {
        double lhs = 0.0;
        for (auto [j, a] : row.terms) lhs += a * x[j];
        bool ok = row.sense == Sense::less_equal      ? lhs <= row.rhs + feasibility_tolerance
                  : row.sense == Sense::greater_equal ? lhs >= row.rhs - feasibility_tolerance
                                                      : std::abs(lhs - row.rhs) <= feasibility_tolerance;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

MipResult solve_binary(LpSolver& lp, const MipOptions& options) {
    const int n = lp.num_columns();
    std::vector<double> orig_lo(n), orig_hi(n);
    for (int j = 0; j < n; ++j) {
        orig_lo[j] = lp.lower(j);
        orig_hi[j] = lp.upper(j);
    }
    std::vector<int> fixed(n, -1);

    MipResult result;
    double incumbent = infinity;
    if (admissible(lp, options.incumbent)) {
        incumbent = 0.0;
        for (int j = 0; j < n; ++j) incumbent += lp.objective()[j] * options.incumbent[j];
        result.values = options.incumbent;
        result.has_incumbent = true;
    }
    const double step = objective_step(lp.objective());
    // A node is worth exploring only if its bound leaves room for an improvement.
    auto hopeless = [&](double bound) {
        if (step > 0.0) return bound > incumbent - step + 1e-9;
        return bound >= incumbent - options.absolute_gap;
    };
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;
    open.push(Node{-infinity, 0, next_id++, {}});

    auto restore = [&] {
        for (int j = 0; j < n; ++j)
            if (fixed[j] >= 0) lp.set_bounds(j, orig_lo[j], orig_hi[j]);
    };

    bool limit_hit = false;
    while (!open.empty()) {
        Node node = open.top();
        if (hopeless(node.bound)) break;  // everything left is pruned
        if (result.nodes_solved >= options.node_limit) {
            limit_hit = true;
            break;
        }
        open.pop();

        std::vector<int> target(n, -1);
        for (auto [col, v] : node.fixes) target[col] = v;
        for (int j = 0; j < n; ++j) {
            if (target[j] == fixed[j]) continue;
            if (target[j] < 0) lp.set_bounds(j, orig_lo[j], orig_hi[j]);
            else lp.set_bounds(j, target[j], target[j]);
            fixed[j] = target[j];
        }

        LpResult relax = lp.solve();
        ++result.nodes_solved;
        if (relax.status == LpStatus::infeasible) continue;
        if (relax.status != LpStatus::optimal) {
            restore();
            throw std::runtime_error(std::string("LP relaxation failed: ") + to_string(relax.status));
        }
        if (hopeless(relax.objective)) continue;

        int branch_col = -1;
        double best_frac = -1.0;
        for (int j = 0; j < n; ++j) {
            double v = relax.values[j];
            double frac = std::min(v - std::floor(v), std::ceil(v) - v);
            if (frac <= integrality_tolerance) continue;
            double closeness = 0.5 - std::abs(v - std::floor(v) - 0.5);
            if (closeness > best_frac + 1e-12) {
                best_frac = closeness;
                branch_col = j;
            }
        }
        if (branch_col < 0) {
            std::vector<double> rounded(n);
            double obj = 0.0;
            for (int j = 0; j < n; ++j) {
                rounded[j] = std::round(relax.values[j]);
                obj += lp.objective()[j] * rounded[j];
            }
            if (obj < incumbent) {
                incumbent = obj;
                result.values = std::move(rounded);
                result.has_incumbent = true;
            }
            continue;
        }
        ++result.branchings;
        for (std::uint8_t v : {std::uint8_t{0}, std::uint8_t{1}}) {
            Node child{relax.objective, node.depth + 1, next_id++, node.fixes};
            child.fixes.emplace_back(branch_col, v);
            open.push(std::move(child));
        }
    }

    restore();
    result.objective = result.has_incumbent ? incumbent : infinity;
    if (limit_hit) {
        result.status = MipStatus::node_limit;
        double bound = incumbent;
        auto rest = open;
        while (!rest.empty()) {
            bound = std::min(bound, rest.top().bound);
            rest.pop();
        }
        result.best_bound = bound;
    } else {
        result.status = result.has_incumbent ? MipStatus::optimal : MipStatus::infeasible;
        result.best_bound = result.objective;
    }
    return result;
}

MipResult solve_binary(int num_columns, std::span<const double> objective, std::span<const Row> rows,
                       const MipOptions& options) {
    LpSolver lp(num_columns, std::vector<double>(objective.begin(), objective.end()),
                std::vector<double>(num_columns, 0.0), std::vector<double>(num_columns, 1.0));
    lp.add_rows(rows);
    return solve_binary(lp, options);
}

}  // namespace ldp::milp
