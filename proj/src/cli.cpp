#include "ldp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ldp/bounds.hpp"
#include "ldp/io.hpp"
#include "ldp/oracle.hpp"
#include "ldp/reductions.hpp"
#include "ldp/solver.hpp"
#include "ldp/tracking.hpp"

namespace ldp {
namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decision that came out negative; the result is already printed.
struct Negative {};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

struct SolveOptions {
    int max_rounds = 100;
    long node_limit = 1000000;
    double time_limit = 0.0;
    bool no_symmetric = false;
    std::string lifted_flow = "auto";

    void attach(CLI::App* app) {
        app->add_option("--max-rounds", max_rounds, "Maximum cutting-plane rounds")->check(CLI::NonNegativeNumber);
        app->add_option("--node-limit", node_limit, "Branch-and-bound node limit per master solve")
            ->check(CLI::PositiveNumber);
        app->add_option("--time-limit", time_limit, "Wall-clock limit in seconds (0: none)")
            ->check(CLI::NonNegativeNumber);
        app->add_flag("--no-symmetric", no_symmetric, "Do not separate the symmetric families");
        app->add_option("--lifted-flow", lifted_flow, "Lifted flow inequalities")
            ->check(CLI::IsMember({"auto", "on", "off"}));
    }

    SolveConfig config() const {
        SolveConfig c;
        c.max_cut_rounds = max_rounds;
        c.ilp_node_limit = node_limit;
        if (time_limit > 0.0) c.time_limit_seconds = time_limit;
        c.include_symmetric = !no_symmetric;
        c.lifted_flow = lifted_flow == "on"    ? LiftedFlowMode::on
                        : lifted_flow == "off" ? LiftedFlowMode::off
                                               : LiftedFlowMode::automatic;
        return c;
    }
};

std::vector<Family> parse_families(const std::string& list) {
    std::vector<Family> out;
    if (list == "all") return all_families();
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        auto f = family_from_name(name);
        if (!f) throw UsageError("unknown family '" + name + "'");
        out.push_back(*f);
    }
    if (out.empty()) throw UsageError("no families given");
    return out;
}

void print_assignment(const SatDecision& d, std::ostream& out) {
    out << "assignment";
    for (std::size_t v = 1; v < d.assignment.size(); ++v) out << ' ' << d.assignment[v];
    out << '\n';
}

void print_metrics(const TrackingMetrics& m, std::ostream& out) {
    out << "metric gt_detections " << m.gt_detections << '\n'
        << "metric predicted_detections " << m.predicted_detections << '\n'
        << "metric false_negatives " << m.false_negatives << '\n'
        << "metric false_positives " << m.false_positives << '\n'
        << "metric id_switches " << m.id_switches << '\n'
        << "metric unlabeled " << m.unlabeled << '\n'
        << "metric mota " << format_result(m.mota) << '\n'
        << "metric idp " << format_result(m.idp) << '\n'
        << "metric idr " << format_result(m.idr) << '\n'
        << "metric idf1 " << format_result(m.idf1) << '\n'
        << "metric link_precision " << format_result(m.link_precision) << '\n'
        << "metric link_recall " << format_result(m.link_recall) << '\n';
}

// Stated objective must agree with the recomputed one to the printed precision.
bool objective_matches(double stated, double actual) {
    return std::abs(stated - actual) <= 1e-8 * std::max(1.0, std::abs(actual));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lifted disjoint paths solver", "ldp"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string input, output, solution_path, kind, families_arg = "all";
    bool trace = false, score = false;
    long oracle_limit = 5000000;
    int max_path_len = default_max_path_len;
    SolveOptions solve_options;
    TrackingConfig track;

    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance by branch and cut; prints the solution");
    solve_cmd->add_option("instance", input, "Instance file")->required();
    solve_cmd->add_option("-o,--output", output, "Write the solution here instead of stdout");
    solve_cmd->add_flag("--trace", trace, "Print one JSON line per cutting-plane round to stderr");
    solve_options.attach(solve_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Solve a small instance by exhaustive enumeration");
    oracle_cmd->add_option("instance", input, "Instance file")->required();
    oracle_cmd->add_option("-o,--output", output, "Write the solution here instead of stdout");
    oracle_cmd->add_option("--limit", oracle_limit, "Maximum number of enumerated solutions")
        ->check(CLI::PositiveNumber);

    auto* bound_cmd = app.add_subcommand("bound", "LP bound over the [0,1] box and enumerated families");
    bound_cmd->add_option("instance", input, "Instance file")->required();
    bound_cmd->add_option("--families", families_arg, "Comma-separated family names or 'all'");
    bound_cmd->add_option("--max-path-len", max_path_len, "Longest witness path in edges (at most 8)")
        ->check(CLI::Range(1, 8));

    auto* reduce_cmd = app.add_subcommand("reduce", "Build the instance of a 3-SAT formula or multicommodity network");
    reduce_cmd->add_option("kind", kind, "sat or mcf")->required()->check(CLI::IsMember({"sat", "mcf"}));
    reduce_cmd->add_option("input", input, "DIMACS or network file")->required();
    reduce_cmd->add_option("-o,--output", output, "Write the instance here instead of stdout");

    auto* decide_cmd =
        app.add_subcommand("decide", "Decide a 3-SAT formula or multicommodity network; exit 0 yes, 3 no");
    decide_cmd->add_option("kind", kind, "sat or mcf")->required()->check(CLI::IsMember({"sat", "mcf"}));
    decide_cmd->add_option("input", input, "DIMACS or network file")->required();
    solve_options.attach(decide_cmd);

    auto* track_cmd = app.add_subcommand("track", "Two-step tracking over a detection cost file");
    track_cmd->add_option("costs", input, "Cost file")->required();
    track_cmd->add_option("-o,--output", output, "Write the tracks here instead of stdout");
    track_cmd->add_option("--interval-len", track.interval_length, "Frames per first-step interval")
        ->check(CLI::PositiveNumber);
    track_cmd->add_option("--K", track.k_nearest, "Base edges kept per detection and later frame")
        ->check(CLI::PositiveNumber);
    track_cmd->add_option("--max-gap-frames", track.max_gap_frames, "Longest edge in frames (0: two seconds)")
        ->check(CLI::NonNegativeNumber);
    track_cmd->add_option("--lift-epsilon", track.lift_epsilon, "Lifted costs of smaller magnitude are dropped")
        ->check(CLI::NonNegativeNumber);
    track_cmd->add_option("--fps", track.fps, "Frames per second")->check(CLI::PositiveNumber);
    track_cmd->add_option("--jobs", track.jobs, "Concurrent first-step interval solves")
        ->check(CLI::PositiveNumber);
    track_cmd->add_option("--max-iterations", track.max_iterations, "Second-step iterations")
        ->check(CLI::PositiveNumber);
    track_cmd->add_flag("--score", score, "Append identity metrics against the gt labels");
    solve_options.attach(track_cmd);

    auto* validate_cmd = app.add_subcommand("validate", "Check an instance and optionally a solution for it");
    validate_cmd->add_option("instance", input, "Instance file")->required();
    validate_cmd->add_option("--solution", solution_path, "Solution file to certify");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_usage;
    }

    std::string source = input;
    try {
        if (*solve_cmd) {
            Instance inst = load_instance(input);
            SolveConfig config = solve_options.config();
            if (trace) config.trace = &err;
            SolveOutcome r = solve(inst, config);
            emit(serialize_solution(inst, r.solution), output, out);
            if (r.status != SolveStatus::optimal) {
                err << "solver stopped: " << to_string(r.status) << "; lower bound " << format_result(r.lower_bound)
                    << '\n';
                return exit_limit;
            }
        } else if (*oracle_cmd) {
            Instance inst = load_instance(input);
            emit(serialize_solution(inst, brute_force_optimum(inst, oracle_limit)), output, out);
        } else if (*bound_cmd) {
            std::vector<Family> families = parse_families(families_arg);
            Instance inst = load_instance(input);
            out << format_result(lp_bound(inst, families, max_path_len)) << '\n';
        } else if (*reduce_cmd) {
            std::string text = read_file(input);
            Instance inst = kind == "sat" ? reduce_3sat(parse_dimacs(text)).instance : reduce_mcf(parse_mcf(text)).instance;
            emit(serialize_instance(inst), output, out);
        } else if (*decide_cmd) {
            std::string text = read_file(input);
            SolveConfig config = solve_options.config();
            bool yes = false;
            if (kind == "sat") {
                SatDecision d = decide_3sat(parse_dimacs(text), config);
                yes = d.satisfiable;
                out << (yes ? "satisfiable" : "unsatisfiable") << '\n' << "optimum " << format_result(d.optimum) << '\n';
                if (yes) print_assignment(d, out);
            } else {
                McfDecision d = decide_mcf(parse_mcf(text), config);
                yes = d.feasible;
                out << (yes ? "feasible" : "infeasible") << '\n'
                    << "optimum " << format_result(d.optimum) << '\n'
                    << "paths " << d.paths << '\n';
            }
            if (!yes) throw Negative{};
        } else if (*track_cmd) {
            track.solver = solve_options.config();
            CostTable costs = parse_cost_table(read_file(input));
            TrackingResult r = run_tracking(costs, track);
            for (const auto& rep : r.first.intervals)
                err << "interval " << rep.interval << " frames " << rep.first_frame << '-' << rep.last_frame
                    << " nodes " << rep.nodes << " base " << rep.base_edges << " lifted " << rep.lifted_edges
                    << " rounds " << rep.rounds << " objective " << format_result(rep.objective) << '\n';
            for (std::size_t i = 0; i < r.second.objective_trace.size(); ++i)
                err << "iteration " << i + 1 << " objective " << format_result(r.second.objective_trace[i]) << '\n';
            err << "splits " << r.second.splits_applied << (r.second.converged ? " converged" : " stopped") << '\n';
            std::string text = format_tracks(r.second.tracks);
            text += "objective " + format_result(r.second.tracks.objective) + "\n";
            if (score) {
                std::ostringstream metrics;
                print_metrics(score_assignment(r.second.tracks, costs.labels), metrics);
                text += metrics.str();
            }
            emit(text, output, out);
        } else if (*validate_cmd) {
            Instance inst = load_instance(input);
            if (!solution_path.empty()) {
                source = solution_path;
                SolutionFile file = parse_solution(read_file(solution_path));
                for (const auto& path : file.paths)
                    for (NodeId v : path)
                        if (v.value >= inst.num_nodes())
                            throw FlowError("node " + to_string(v) + " is not in the instance");
                FlowSolution sol = solution_from_paths(inst, file.paths);
                Certificate cert = certify(inst, sol);
                if (!cert.ok) {
                    for (const auto& issue : cert.issues) err << source << ": " << issue.reason << '\n';
                    return exit_input;
                }
                if (!objective_matches(file.objective, sol.objective))
                    throw FlowError("stated objective " + format_result(file.objective) + " differs from " +
                                    format_result(sol.objective));
            }
            out << "ok\n";
        }
    } catch (const Negative&) {
        return exit_negative;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        std::string message = e.what();
        message = message.substr(message.find(": ") + 2);
        err << source << ':' << e.line() << ':' << e.column() << ": " << message << '\n';
        return exit_input;
    } catch (const SolverLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_limit;
    } catch (const EnumerationLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_limit;
    } catch (const BoundError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_limit;
    } catch (const std::exception& e) {
        err << source << ": " << e.what() << '\n';
        return exit_input;
    }
    return exit_success;
}

}  // namespace ldp
