#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "ldp/linear.hpp"

namespace ldp::milp {

constexpr double infinity = std::numeric_limits<double>::infinity();
constexpr double feasibility_tolerance = 1e-9;
constexpr double integrality_tolerance = 1e-6;

struct Row {
    std::vector<std::pair<int, double>> terms;  // (column, coefficient)
    Sense sense = Sense::less_equal;
    double rhs = 0.0;
};

Row lower_constraint(const VariableLayout& layout, const LinearConstraint& constraint);

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

const char* to_string(LpStatus status);

struct LpResult {
    LpStatus status = LpStatus::optimal;
    double objective = 0.0;
    std::vector<double> values;
    long iterations = 0;
    // Row whose dual multiplier dominates the phase-one certificate.
    std::optional<int> infeasible_row;
};

// Bounded revised simplex on a sparse LU factorization of the basis with
// product-form updates. A dual phase with perturbed costs runs while the
// basis is dual feasible (always the case after appending rows or changing
// bounds of boxed columns), followed by primal iterations on the true costs. Rows are modelled as ranged slack columns so
// that rows can be appended and bounds changed while keeping the current
// basis as a warm start.
class LpSolver {
public:
    LpSolver(int num_columns, std::vector<double> objective, std::vector<double> lower, std::vector<double> upper);
    ~LpSolver();
    LpSolver(const LpSolver&) = delete;
    LpSolver& operator=(const LpSolver&) = delete;

    int num_columns() const { return n_; }
    int num_rows() const { return m_; }

    int add_row(const Row& row);
    void add_rows(std::span<const Row> rows);
    void set_bounds(int column, double lower, double upper);
    double lower(int column) const { return lo_[column]; }
    double upper(int column) const { return hi_[column]; }
    const std::vector<double>& objective() const { return cost_; }
    const std::vector<Row>& rows() const { return rows_; }

    void set_iteration_limit(long limit) { iteration_limit_ = limit; }

    LpResult solve();

private:
    enum class Phase { one, two };

    struct Factor;
    struct Eta {
        int position = 0;
        double pivot = 1.0;
        std::vector<std::pair<int, double>> others;  // off-pivot entries of the entering column
    };

    void recompute_primal();
    void refactor();
    void reset_to_slack_basis();
    void ftran(Eigen::VectorXd& v) const;  // v <- B^{-1} v
    void btran(Eigen::VectorXd& v) const;  // v <- B^{-T} v
    Eigen::VectorXd column_times_inverse(int column) const;  // B^{-1} a_j
    double reduced_cost(int column, const Eigen::VectorXd& pi, double cost) const;
    void pivot(int position, const Eigen::VectorXd& alpha);
    std::optional<int> certificate_row(const Eigen::VectorXd& pi) const;
    // Runs while the basis can be kept dual feasible; nullopt hands over to
    // the primal method.
    std::optional<LpStatus> dual_simplex(long& iterations, std::optional<int>& infeasible_row, double perturbation);

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<Row> rows_;
    std::vector<double> cost_;
    std::vector<double> lo_, hi_, x_;
    std::vector<char> at_upper_;
    std::vector<int> basis_, pos_;
    std::unique_ptr<Factor> factor_;
    std::vector<Eta> etas_;
    std::vector<double> edge_weights_;  // per basis position: squared norm of its row of B^{-1}
    bool primal_dirty_ = true;
    long iteration_limit_ = 200000;
};

// min c.x over the [0,1] box intersected with the rows.
LpResult solve_lp(int num_columns, std::span<const double> objective, std::span<const Row> rows);
LpResult solve_lp(const VariableLayout& layout, std::span<const double> objective,
                  std::span<const LinearConstraint> constraints);

}  // namespace ldp::milp
