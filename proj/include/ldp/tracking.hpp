#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/solver.hpp"

namespace ldp {

class TrackingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Detection {
    int frame = 0;
    int index = 0;
    auto operator<=>(const Detection&) const = default;
};

std::string format_detection(const Detection& d);  // "frame:index"

// Pairwise costs between detections, keyed by forward-in-time pairs, with
// optional ground-truth labels. A negative label marks a false detection.
struct CostTable {
    std::map<std::pair<Detection, Detection>, double> base;
    std::map<std::pair<Detection, Detection>, double> lifted;
    std::map<Detection, int> labels;

    void add_base(Detection from, Detection to, double cost);
    void add_lifted(Detection from, Detection to, double cost);
    std::optional<double> base_cost(Detection from, Detection to) const;
    std::optional<double> lifted_cost(Detection from, Detection to) const;

    // Every detection referenced by a cost or a label, in (frame, index) order.
    std::vector<Detection> detections() const;
};

// Lines `base f1 i1 f2 i2 c`, `lift f1 i1 f2 i2 c` and `gt f i label`.
CostTable parse_cost_table(std::string_view text);
std::string format_cost_table(const CostTable& table);

struct TrackingConfig {
    int interval_length = 50;
    int k_nearest = 3;
    int fps = 10;
    int max_gap_frames = 0;  // 0: two seconds at fps
    double lift_epsilon = 0.05;
    bool lifted_gap_strides = true;
    int jobs = 1;
    int max_iterations = 10;
    SolveConfig solver;

    int max_gap() const { return max_gap_frames > 0 ? max_gap_frames : 2 * fps; }
    // Lifted candidates are kept for every gap up to half a second, for
    // every second gap up to one second and for every third gap beyond.
    bool keeps_lifted_gap(int gap) const;
};

struct IntervalGraph {
    Instance instance;
    std::vector<Detection> nodes;  // per inner node
    int dropped_lifted = 0;        // candidates whose endpoints are not connected by base edges
};

IntervalGraph build_interval_graph(const CostTable& costs, int first_frame, int last_frame,
                                   const TrackingConfig& config);

struct Tracklet {
    std::vector<Detection> detections;
    double cost = 0.0;  // internal base and lifted costs
};

// Detection-level cost of one track: base costs between consecutive
// detections plus lifted costs of every pair within the maximum gap.
double track_cost(const CostTable& costs, const std::vector<Detection>& track, int max_gap);
Tracklet make_tracklet(const CostTable& costs, std::vector<Detection> detections, int max_gap);

struct TrackSet {
    std::vector<std::vector<Detection>> tracks;  // ordered by first detection
    double objective = 0.0;
};

TrackSet make_track_set(const CostTable& costs, std::vector<std::vector<Detection>> tracks, int max_gap);
std::string format_tracks(const TrackSet& tracks);  // `track <id>: f:i ...` per line

struct IntervalReport {
    int interval = 0;
    int first_frame = 0;
    int last_frame = 0;
    int nodes = 0;
    int base_edges = 0;
    int lifted_edges = 0;
    int rounds = 0;
    double objective = 0.0;
};

struct FirstStepResult {
    std::vector<Tracklet> tracklets;  // ordered by first detection
    std::vector<IntervalReport> intervals;
};

// Splits the frame axis into consecutive intervals and solves them
// concurrently with up to config.jobs threads. Every active path becomes a
// tracklet and every detection left off the paths a single-detection
// tracklet. Failures name the interval; solver stops raise SolverLimit.
FirstStepResult solve_first_step(const CostTable& costs, const TrackingConfig& config);

// Tracklets become nodes with their internal cost; tracklet pairs get the
// base cost from the last detection of one to the first of the other and
// the summed lifted costs of all detection pairs within the maximum gap.
Instance build_tracklet_graph(const std::vector<Tracklet>& tracklets, const CostTable& costs,
                              const TrackingConfig& config);

struct SecondStepResult {
    TrackSet tracks;
    std::vector<Tracklet> tracklets;
    std::vector<double> objective_trace;  // detection-level objective of each solve
    int iterations = 0;
    int splits_applied = 0;
    bool converged = false;  // stopped because no improving split was left
};

// Cut points of a track whose split lowers the detection-level objective,
// with the change in objective, in track order.
std::vector<std::pair<int, double>> improving_splits(const CostTable& costs, const std::vector<Detection>& track,
                                                     int max_gap);

SecondStepResult solve_second_step(std::vector<Tracklet> tracklets, const CostTable& costs,
                                   const TrackingConfig& config);

struct TrackingResult {
    FirstStepResult first;
    SecondStepResult second;
};

TrackingResult run_tracking(const CostTable& costs, const TrackingConfig& config);

struct TrackingMetrics {
    int gt_detections = 0;         // labelled detections of real objects
    int predicted_detections = 0;  // labelled detections placed on a track
    int false_negatives = 0;
    int false_positives = 0;
    int id_switches = 0;
    int unlabeled = 0;  // tracked detections without a label, excluded
    double mota = 0.0;
    int idtp = 0;
    double idp = 0.0;
    double idr = 0.0;
    double idf1 = 0.0;
    // Links are consecutive detections of a track; a link is correct when
    // both ends carry the same object label.
    double link_precision = 1.0;
    double link_recall = 0.0;
};

TrackingMetrics score_assignment(const TrackSet& tracks, const std::map<Detection, int>& labels);

// Maximum-weight assignment of rows to columns; result[r] is the column of
// row r or -1.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight);

}  // namespace ldp
