#include "ldp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/SparseLU>

namespace ldp::milp {

namespace {

constexpr double optimality_tolerance = 1e-9;
constexpr double pivot_tolerance = 1e-9;
constexpr double degenerate_step = 1e-12;
constexpr int refactor_interval = 50;
constexpr double dual_pivot_tolerance = 1e-7;
constexpr double dual_feasibility_slack = 1e-7;
constexpr double cost_perturbation = 1e-7;

}  // namespace

// Basic slack columns are unit columns, so only the rows whose slack is
// nonbasic, restricted to the basic structural columns, need a factorization.
struct LpSolver::Factor {
    mutable Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    std::vector<int> slack_position;  // per row: basis position of its slack, or -1
    std::vector<int> kernel_rows;     // rows whose slack is nonbasic
    std::vector<int> kernel_positions;  // basis positions of structural columns
    std::vector<int> kernel_columns;    // the structural columns themselves
    mutable Eigen::VectorXd work;
};

LpSolver::~LpSolver() = default;

const char* to_string(LpStatus status) {
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::iteration_limit: return "iteration_limit";
    }
    return "?";
}

Row lower_constraint(const VariableLayout& layout, const LinearConstraint& constraint) {
    Row row;
    row.sense = constraint.sense;
    row.rhs = constraint.rhs;
    row.terms.reserve(constraint.terms.size());
    for (const Term& t : constraint.terms) row.terms.emplace_back(layout.column(t.var), t.coeff);
    return row;
}

LpSolver::LpSolver(int num_columns, std::vector<double> objective, std::vector<double> lower,
                   std::vector<double> upper)
    : n_(num_columns), cols_(num_columns), cost_(std::move(objective)), lo_(std::move(lower)), hi_(std::move(upper)) {
    if (static_cast<int>(cost_.size()) != n_ || static_cast<int>(lo_.size()) != n_ ||
        static_cast<int>(hi_.size()) != n_)
        throw std::invalid_argument("LpSolver: vector sizes do not match column count");
    x_.assign(n_, 0.0);
    at_upper_.assign(n_, 0);
    pos_.assign(n_, -1);
    for (int j = 0; j < n_; ++j) {
        if (lo_[j] > hi_[j]) throw std::invalid_argument("LpSolver: empty bound interval");
        if (std::isfinite(lo_[j])) x_[j] = lo_[j];
        else if (std::isfinite(hi_[j])) {
            x_[j] = hi_[j];
            at_upper_[j] = 1;
        } else {
            throw std::invalid_argument("LpSolver: free columns are not supported");
        }
    }
    factor_ = std::make_unique<Factor>();
}

int LpSolver::add_row(const Row& row) {
    add_rows(std::span<const Row>(&row, 1));
    return m_ - 1;
}

void LpSolver::add_rows(std::span<const Row> rows) {
    if (rows.empty()) return;
    for (const Row& row : rows) {
        const int i = m_;
        double activity = 0.0;
        for (auto [c, a] : row.terms) {
            if (c < 0 || c >= n_) throw std::out_of_range("LpSolver: row refers to unknown column");
            activity += a * x_[c];
        }
        for (auto [c, a] : row.terms) cols_[c].emplace_back(i, a);
        rows_.push_back(row);
        double lo = -infinity, hi = infinity;
        if (row.sense != Sense::greater_equal) hi = row.rhs;
        if (row.sense != Sense::less_equal) lo = row.rhs;
        lo_.push_back(lo);
        hi_.push_back(hi);
        x_.push_back(activity);
        at_upper_.push_back(0);
        pos_.push_back(i);
        basis_.push_back(n_ + i);
        edge_weights_.push_back(1.0);
        ++m_;
    }
    // The new slacks enter the basis; the bordered basis keeps the old one nonsingular.
    refactor();
}

void LpSolver::set_bounds(int column, double lower, double upper) {
    if (column < 0 || column >= n_) throw std::out_of_range("LpSolver: bad column");
    if (lower > upper) throw std::invalid_argument("LpSolver: empty bound interval");
    lo_[column] = lower;
    hi_[column] = upper;
    if (pos_[column] < 0) {
        if (at_upper_[column] && std::isfinite(upper)) x_[column] = upper;
        else {
            at_upper_[column] = 0;
            x_[column] = lower;
        }
        primal_dirty_ = true;
    }
}

void LpSolver::recompute_primal() {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(m_);
    for (int j = 0; j < n_; ++j) {
        if (pos_[j] >= 0 || x_[j] == 0.0) continue;
        for (auto [row, a] : cols_[j]) r[row] -= a * x_[j];
    }
    for (int i = 0; i < m_; ++i)
        if (pos_[n_ + i] < 0) r[i] += x_[n_ + i];
    ftran(r);
    for (int p = 0; p < m_; ++p) x_[basis_[p]] = r[p];
    primal_dirty_ = false;
}

void LpSolver::reset_to_slack_basis() {
    for (int p = 0; p < m_; ++p) {
        int j = basis_[p];
        pos_[j] = -1;
        if (j < n_) {
            bool up = std::isfinite(hi_[j]) && (!std::isfinite(lo_[j]) || x_[j] > 0.5 * (lo_[j] + hi_[j]));
            at_upper_[j] = up ? 1 : 0;
            x_[j] = up ? hi_[j] : lo_[j];
        }
    }
    for (int i = 0; i < m_; ++i) {
        basis_[i] = n_ + i;
        pos_[n_ + i] = i;
    }
    edge_weights_.assign(m_, 1.0);
    refactor();
}

void LpSolver::refactor() {
    etas_.clear();
    primal_dirty_ = true;
    Factor& f = *factor_;
    f.slack_position.assign(m_, -1);
    f.kernel_rows.clear();
    f.kernel_positions.clear();
    f.kernel_columns.clear();
    for (int p = 0; p < m_; ++p) {
        int j = basis_[p];
        if (j >= n_) {
            f.slack_position[j - n_] = p;
        } else {
            f.kernel_positions.push_back(p);
            f.kernel_columns.push_back(j);
        }
    }
    std::vector<int> kernel_index(m_, -1);
    for (int i = 0; i < m_; ++i)
        if (f.slack_position[i] < 0) {
            kernel_index[i] = static_cast<int>(f.kernel_rows.size());
            f.kernel_rows.push_back(i);
        }
    const int k = static_cast<int>(f.kernel_columns.size());
    if (k == 0) return;
    std::vector<Eigen::Triplet<double>> entries;
    for (int c = 0; c < k; ++c)
        for (auto [row, a] : cols_[f.kernel_columns[c]])
            if (kernel_index[row] >= 0) entries.emplace_back(kernel_index[row], c, a);
    Eigen::SparseMatrix<double> kernel(k, k);
    kernel.setFromTriplets(entries.begin(), entries.end());
    kernel.makeCompressed();
    f.lu.analyzePattern(kernel);
    f.lu.factorize(kernel);
    bool ok = f.lu.info() == Eigen::Success;
    if (ok) {
        // Residual on a fixed probe vector.
        Eigen::VectorXd probe = Eigen::VectorXd::LinSpaced(k, 1.0, 2.0);
        Eigen::VectorXd sol = f.lu.solve(probe);
        double residual = (kernel * sol - probe).cwiseAbs().maxCoeff();
        ok = std::isfinite(residual) && residual <= 1e-7;
    }
    if (!ok) reset_to_slack_basis();
}

void LpSolver::ftran(Eigen::VectorXd& v) const {
    if (m_ == 0) return;
    const Factor& f = *factor_;
    const int k = static_cast<int>(f.kernel_columns.size());
    Eigen::VectorXd& out = f.work;
    out.resize(m_);
    for (int i = 0; i < m_; ++i)
        if (f.slack_position[i] >= 0) out[f.slack_position[i]] = -v[i];
    if (k > 0) {
        Eigen::VectorXd rhs(k);
        for (int r = 0; r < k; ++r) rhs[r] = v[f.kernel_rows[r]];
        Eigen::VectorXd xk = f.lu.solve(rhs);
        for (int c = 0; c < k; ++c) {
            const double xc = xk[c];
            out[f.kernel_positions[c]] = xc;
            if (xc == 0.0) continue;
            for (auto [row, a] : cols_[f.kernel_columns[c]])
                if (f.slack_position[row] >= 0) out[f.slack_position[row]] += a * xc;
        }
    }
    v.swap(out);
    for (const Eta& e : etas_) {
        double t = v[e.position] / e.pivot;
        if (t != 0.0)
            for (auto [i, a] : e.others) v[i] -= a * t;
        v[e.position] = t;
    }
}

void LpSolver::btran(Eigen::VectorXd& v) const {
    if (m_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
        double s = v[it->position];
        for (auto [i, a] : it->others) s -= a * v[i];
        v[it->position] = s / it->pivot;
    }
    const Factor& f = *factor_;
    const int k = static_cast<int>(f.kernel_columns.size());
    Eigen::VectorXd& out = f.work;
    out.resize(m_);
    for (int i = 0; i < m_; ++i)
        if (f.slack_position[i] >= 0) out[i] = -v[f.slack_position[i]];
    if (k > 0) {
        Eigen::VectorXd rhs(k);
        for (int c = 0; c < k; ++c) {
            double r = v[f.kernel_positions[c]];
            for (auto [row, a] : cols_[f.kernel_columns[c]])
                if (f.slack_position[row] >= 0) r -= a * out[row];
            rhs[c] = r;
        }
        Eigen::VectorXd yk = f.lu.transpose().solve(rhs);
        for (int r = 0; r < k; ++r) out[f.kernel_rows[r]] = yk[r];
    }
    v.swap(out);
}

Eigen::VectorXd LpSolver::column_times_inverse(int column) const {
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m_);
    if (column < n_) {
        for (auto [row, a] : cols_[column]) alpha[row] += a;
    } else {
        alpha[column - n_] = -1.0;
    }
    ftran(alpha);
    return alpha;
}

double LpSolver::reduced_cost(int column, const Eigen::VectorXd& pi, double cost) const {
    if (column >= n_) return cost + pi[column - n_];
    double d = cost;
    for (auto [row, a] : cols_[column]) d -= pi[row] * a;
    return d;
}

void LpSolver::pivot(int position, const Eigen::VectorXd& alpha) {
    Eta e;
    e.position = position;
    e.pivot = alpha[position];
    for (int p = 0; p < m_; ++p)
        if (p != position && alpha[p] != 0.0) e.others.emplace_back(p, alpha[p]);
    etas_.push_back(std::move(e));
}

std::optional<int> LpSolver::certificate_row(const Eigen::VectorXd& pi) const {
    std::optional<int> best;
    double best_abs = 0.0;
    for (int i = 0; i < m_; ++i) {
        if (std::abs(pi[i]) > best_abs + 1e-12) {
            best_abs = std::abs(pi[i]);
            best = i;
        }
    }
    return best;
}

std::optional<LpStatus> LpSolver::dual_simplex(long& iterations, std::optional<int>& infeasible_row,
                                              double perturbation) {
    // Perturbed costs keep the dual nondegenerate. Signs follow the bound
    // each nonbasic column rests at, so dual feasibility is preserved.
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> unit(0.5, 1.0);
    const int total = n_ + m_;
    std::vector<double> cost(total, 0.0);
    for (int j = 0; j < n_; ++j) cost[j] = cost_[j];
    for (int j = 0; j < total; ++j) {
        if (lo_[j] == hi_[j] || perturbation == 0.0) continue;
        double eps = perturbation * (1.0 + std::abs(cost[j])) * unit(rng);
        cost[j] += at_upper_[j] ? -eps : eps;
    }
    Eigen::VectorXd pi(m_), rho(m_);
    std::vector<double> d(total, 0.0), row(total, 0.0);
    std::vector<int> touched;
    std::vector<char> in_row(total, 0);
    int mismatches = 0;
    bool fresh_duals = false;

    auto price = [&] {
        for (int p = 0; p < m_; ++p) pi[p] = cost[basis_[p]];
        btran(pi);
        for (int j = 0; j < total; ++j) d[j] = pos_[j] >= 0 ? 0.0 : reduced_cost(j, pi, cost[j]);
        fresh_duals = true;
    };
    price();

    while (iterations < iteration_limit_) {
        bool flipped = false;
        for (int j = 0; j < total; ++j) {
            if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
            bool wrong = at_upper_[j] ? d[j] > optimality_tolerance : d[j] < -optimality_tolerance;
            if (!wrong) continue;
            if (!std::isfinite(lo_[j]) || !std::isfinite(hi_[j])) {
                if (std::abs(d[j]) <= dual_feasibility_slack) continue;
                if (flipped) recompute_primal();
                if (!fresh_duals) {
                    price();
                    flipped = true;
                    break;
                }
                return std::nullopt;
            }
            at_upper_[j] = !at_upper_[j];
            x_[j] = at_upper_[j] ? hi_[j] : lo_[j];
            flipped = true;
        }
        if (flipped) {
            recompute_primal();
            continue;
        }

        // Dual steepest edge: largest squared infeasibility per row weight.
        int r = -1;
        double worst = 0.0;
        for (int p = 0; p < m_; ++p) {
            int j = basis_[p];
            double v = std::max(lo_[j] - x_[j], x_[j] - hi_[j]);
            if (v <= feasibility_tolerance) continue;
            double score = v * v / edge_weights_[p];
            if (score > worst) {
                worst = score;
                r = p;
            }
        }
        if (r < 0) return LpStatus::optimal;
        const int leaving = basis_[r];
        const bool increase = x_[leaving] < lo_[leaving];

        rho.setZero();
        rho[r] = 1.0;
        btran(rho);
        // Pivot row rho^T [A | -I], accumulated over the rows where rho is nonzero.
        for (int j : touched) {
            row[j] = 0.0;
            in_row[j] = 0;
        }
        touched.clear();
        for (int i = 0; i < m_; ++i) {
            const double w = rho[i];
            if (w == 0.0) continue;
            for (auto [c, a] : rows_[i].terms) {
                if (!in_row[c]) {
                    in_row[c] = 1;
                    touched.push_back(c);
                }
                row[c] += w * a;
            }
            row[n_ + i] = -w;
            in_row[n_ + i] = 1;
            touched.push_back(n_ + i);
        }
        // Harris ratio test: bound the step with relaxed reduced costs, then
        // take the largest pivot within that bound.
        double bound = infinity;
        double ignored_reach = 0.0;  // movement of the leaving value through pivots below tolerance
        for (int j : touched) {
            if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
            const double dir = at_upper_[j] ? -1.0 : 1.0;
            const double gain = -dir * row[j] * (increase ? 1.0 : -1.0);
            if (gain <= dual_pivot_tolerance) {
                if (gain > 0.0) ignored_reach += gain * (hi_[j] - lo_[j]);
                continue;
            }
            bound = std::min(bound, (std::abs(d[j]) + optimality_tolerance) / std::abs(row[j]));
        }
        int q = -1;
        double best_pivot = 0.0;
        for (int j : touched) {
            if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
            const double dir = at_upper_[j] ? -1.0 : 1.0;
            if (-dir * row[j] * (increase ? 1.0 : -1.0) <= dual_pivot_tolerance) continue;
            if (std::abs(d[j]) / std::abs(row[j]) <= bound && std::abs(row[j]) > best_pivot) {
                best_pivot = std::abs(row[j]);
                q = j;
            }
        }
        if (q < 0) {
            const double gap = increase ? lo_[leaving] - x_[leaving] : x_[leaving] - hi_[leaving];
            if (!(ignored_reach < gap - feasibility_tolerance)) return std::nullopt;
            infeasible_row = certificate_row(rho);
            return LpStatus::infeasible;
        }

        Eigen::VectorXd alpha = column_times_inverse(q);
        if (std::abs(alpha[r] - row[q]) > 1e-7 * (1.0 + std::abs(row[q]))) {
            if (++mismatches > 3) return std::nullopt;
            refactor();
            recompute_primal();
            price();
            continue;
        }
        Eigen::VectorXd tau = rho;
        ftran(tau);
        const double weight_r = std::max(edge_weights_[r], 1e-12);
        for (int p = 0; p < m_; ++p) {
            if (p == r || alpha[p] == 0.0) continue;
            const double ratio = alpha[p] / alpha[r];
            edge_weights_[p] = std::max(edge_weights_[p] - 2.0 * ratio * tau[p] + ratio * ratio * weight_r,
                                        std::max(1e-4, ratio * ratio));
        }
        edge_weights_[r] = std::max(weight_r / (alpha[r] * alpha[r]), 1e-4);

        const double theta_dual = d[q] / row[q];
        for (int j : touched)
            if (pos_[j] < 0) d[j] -= theta_dual * row[j];
        d[q] = 0.0;
        d[leaving] = -theta_dual;
        fresh_duals = false;

        const double target = increase ? lo_[leaving] : hi_[leaving];
        const double theta = (x_[leaving] - target) / alpha[r];
        x_[q] += theta;
        for (int p = 0; p < m_; ++p) x_[basis_[p]] -= theta * alpha[p];
        x_[leaving] = target;
        at_upper_[leaving] = increase ? 0 : 1;
        pos_[leaving] = -1;
        pivot(r, alpha);
        basis_[r] = q;
        pos_[q] = r;
        ++iterations;
        if (static_cast<int>(etas_.size()) >= refactor_interval) {
            refactor();
            recompute_primal();
            price();
        }
    }
    return LpStatus::iteration_limit;
}

LpResult LpSolver::solve() {
    if (primal_dirty_) recompute_primal();
    LpResult result;
    long iterations = 0;
    if (m_ > 0) {
        // The second pass removes the perturbation; it starts from a basis
        // that is optimal for nearby costs and usually needs few pivots. A
        // fresh factorization then confirms the primal values.
        std::optional<LpStatus> dual;
        for (int attempt = 0; attempt < 3; ++attempt) {
            dual = dual_simplex(iterations, result.infeasible_row, cost_perturbation);
            if (dual == LpStatus::optimal) dual = dual_simplex(iterations, result.infeasible_row, 0.0);
            if (dual != LpStatus::optimal) break;
            refactor();
            recompute_primal();
            bool feasible = true;
            for (int p = 0; p < m_ && feasible; ++p) {
                int j = basis_[p];
                feasible = x_[j] >= lo_[j] - feasibility_tolerance && x_[j] <= hi_[j] + feasibility_tolerance;
            }
            if (feasible) break;
        }
        if (dual == LpStatus::iteration_limit || dual == LpStatus::infeasible) {
            result.status = *dual;
            result.iterations = iterations;
            result.values.assign(x_.begin(), x_.begin() + n_);
            for (int j = 0; j < n_; ++j) result.values[j] = std::clamp(result.values[j], lo_[j], hi_[j]);
            for (int j = 0; j < n_; ++j) result.objective += cost_[j] * result.values[j];
            return result;
        }
    }
    long degenerate = 0;
    bool bland = false;
    const long degenerate_limit = 3L * (m_ + n_);
    int final_checks = 0;
    Eigen::VectorXd cb(m_), pi(m_);

    auto finish = [&](LpStatus status) {
        result.status = status;
        result.iterations = iterations;
        result.values.assign(x_.begin(), x_.begin() + n_);
        for (int j = 0; j < n_; ++j) {
            if (result.values[j] < lo_[j]) result.values[j] = lo_[j];
            if (result.values[j] > hi_[j]) result.values[j] = hi_[j];
        }
        result.objective = 0.0;
        for (int j = 0; j < n_; ++j) result.objective += cost_[j] * result.values[j];
        return result;
    };

    while (true) {
        if (iterations >= iteration_limit_) return finish(LpStatus::iteration_limit);

        bool infeasible = false;
        for (int p = 0; p < m_; ++p) {
            int j = basis_[p];
            if (x_[j] < lo_[j] - feasibility_tolerance) {
                cb[p] = -1.0;
                infeasible = true;
            } else if (x_[j] > hi_[j] + feasibility_tolerance) {
                cb[p] = 1.0;
                infeasible = true;
            } else {
                cb[p] = 0.0;
            }
        }
        const Phase phase = infeasible ? Phase::one : Phase::two;
        if (phase == Phase::two)
            for (int p = 0; p < m_; ++p) cb[p] = basis_[p] < n_ ? cost_[basis_[p]] : 0.0;
        pi = cb;
        btran(pi);

        int entering = -1;
        int direction = 0;
        double best_score = 0.0;
        for (int j = 0; j < n_ + m_; ++j) {
            if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
            double c = (phase == Phase::two && j < n_) ? cost_[j] : 0.0;
            double d = reduced_cost(j, pi, c);
            int dir = 0;
            if (!at_upper_[j] && d < -optimality_tolerance) dir = 1;
            else if (at_upper_[j] && d > optimality_tolerance) dir = -1;
            if (dir == 0) continue;
            if (bland) {
                entering = j;
                direction = dir;
                break;
            }
            if (std::abs(d) > best_score) {
                best_score = std::abs(d);
                entering = j;
                direction = dir;
            }
        }

        if (entering < 0) {
            // Confirm against recomputed basic values before trusting the
            // verdict, and refactor first when many updates have piled up.
            if (!etas_.empty() && final_checks < 3) {
                ++final_checks;
                if (static_cast<int>(etas_.size()) >= refactor_interval / 2) refactor();
                std::vector<double> before(x_);
                recompute_primal();
                bool moved = false;
                for (int p = 0; p < m_ && !moved; ++p)
                    moved = std::abs(x_[basis_[p]] - before[basis_[p]]) > feasibility_tolerance;
                if (moved) continue;
            }
            if (phase == Phase::one) {
                result.infeasible_row = certificate_row(pi);
                return finish(LpStatus::infeasible);
            }
            return finish(LpStatus::optimal);
        }

        Eigen::VectorXd alpha = column_times_inverse(entering);
        double step = hi_[entering] - lo_[entering];
        int leaving = -1;
        bool leave_at_upper = false;
        double leave_pivot = 0.0;
        for (int p = 0; p < m_; ++p) {
            double a = alpha[p];
            if (std::abs(a) < pivot_tolerance) continue;
            double rate = -direction * a;
            int j = basis_[p];
            double t = infinity;
            bool to_upper = false;
            if (rate < 0) {
                if (x_[j] > hi_[j] + feasibility_tolerance) {
                    t = (x_[j] - hi_[j]) / -rate;
                    to_upper = true;
                } else if (x_[j] >= lo_[j] - feasibility_tolerance && std::isfinite(lo_[j])) {
                    t = std::max(0.0, x_[j] - lo_[j]) / -rate;
                }
            } else {
                if (x_[j] < lo_[j] - feasibility_tolerance) {
                    t = (lo_[j] - x_[j]) / rate;
                } else if (x_[j] <= hi_[j] + feasibility_tolerance && std::isfinite(hi_[j])) {
                    t = std::max(0.0, hi_[j] - x_[j]) / rate;
                    to_upper = true;
                }
            }
            if (!std::isfinite(t)) continue;
            bool better;
            if (t < step - degenerate_step) better = true;
            else if (t > step + degenerate_step || leaving < 0) better = false;
            else if (bland) better = j < basis_[leaving];
            else better = std::abs(a) > std::abs(leave_pivot);
            if (better) {
                step = t;
                leaving = p;
                leave_at_upper = to_upper;
                leave_pivot = a;
            }
        }

        if (!std::isfinite(step)) return finish(LpStatus::unbounded);

        ++iterations;
        if (step <= degenerate_step) {
            if (++degenerate > degenerate_limit) bland = true;
        }
        x_[entering] += direction * step;
        for (int p = 0; p < m_; ++p) x_[basis_[p]] -= direction * step * alpha[p];

        if (leaving < 0) {
            at_upper_[entering] = direction > 0 ? 1 : 0;
            x_[entering] = direction > 0 ? hi_[entering] : lo_[entering];
            continue;
        }
        int out = basis_[leaving];
        x_[out] = leave_at_upper ? hi_[out] : lo_[out];
        at_upper_[out] = leave_at_upper ? 1 : 0;
        pos_[out] = -1;
        pivot(leaving, alpha);
        basis_[leaving] = entering;
        pos_[entering] = leaving;
        if (static_cast<int>(etas_.size()) >= refactor_interval) {
            refactor();
            recompute_primal();
        }
    }
}

LpResult solve_lp(int num_columns, std::span<const double> objective, std::span<const Row> rows) {
    LpSolver lp(num_columns, std::vector<double>(objective.begin(), objective.end()),
                std::vector<double>(num_columns, 0.0), std::vector<double>(num_columns, 1.0));
    lp.add_rows(rows);
    return lp.solve();
}

LpResult solve_lp(const VariableLayout& layout, std::span<const double> objective,
                  std::span<const LinearConstraint> constraints) {
    std::vector<Row> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) rows.push_back(lower_constraint(layout, c));
    return solve_lp(layout.size(), objective, rows);
}

}  // namespace ldp::milp
