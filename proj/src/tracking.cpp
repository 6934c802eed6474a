#include "ldp/tracking.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <set>
#include <thread>

#include "ldp/io.hpp"

namespace ldp {

namespace {

constexpr double split_tolerance = 1e-9;

using PairKey = std::pair<Detection, Detection>;

void check_pair(Detection from, Detection to) {
    if (from.frame <= 0 || to.frame <= 0) throw TrackingError("frames must be positive");
    if (from.index < 0 || to.index < 0) throw TrackingError("detection indices must be non-negative");
    if (to.frame <= from.frame)
        throw TrackingError("cost between " + format_detection(from) + " and " + format_detection(to) +
                            " does not go forward in time");
}

// First entry of `table` whose key starts at `from`.
template <class Map>
auto entries_from(const Map& table, Detection from) {
    return table.lower_bound(PairKey{from, Detection{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()}});
}

// Lifted cost summed over pairs drawn from two disjoint detection sets, where
// `earlier` holds the first detection of every counted pair.
double cross_lifted(const CostTable& costs, const std::vector<Detection>& earlier,
                    const std::vector<Detection>& later, int max_gap) {
    double sum = 0.0;
    for (const Detection& a : earlier)
        for (const Detection& b : later) {
            if (b.frame <= a.frame || b.frame - a.frame > max_gap) continue;
            if (auto c = costs.lifted_cost(a, b)) sum += *c;
        }
    return sum;
}

}  // namespace

std::string format_detection(const Detection& d) { return std::to_string(d.frame) + ":" + std::to_string(d.index); }

void CostTable::add_base(Detection from, Detection to, double cost) {
    check_pair(from, to);
    if (!base.emplace(PairKey{from, to}, cost).second)
        throw TrackingError("duplicate base cost " + format_detection(from) + " " + format_detection(to));
}

void CostTable::add_lifted(Detection from, Detection to, double cost) {
    check_pair(from, to);
    if (!lifted.emplace(PairKey{from, to}, cost).second)
        throw TrackingError("duplicate lifted cost " + format_detection(from) + " " + format_detection(to));
}

std::optional<double> CostTable::base_cost(Detection from, Detection to) const {
    auto it = base.find({from, to});
    if (it == base.end()) return std::nullopt;
    return it->second;
}

std::optional<double> CostTable::lifted_cost(Detection from, Detection to) const {
    auto it = lifted.find({from, to});
    if (it == lifted.end()) return std::nullopt;
    return it->second;
}

std::vector<Detection> CostTable::detections() const {
    std::set<Detection> all;
    for (const auto& [key, c] : base) {
        all.insert(key.first);
        all.insert(key.second);
    }
    for (const auto& [key, c] : lifted) {
        all.insert(key.first);
        all.insert(key.second);
    }
    for (const auto& [d, label] : labels) all.insert(d);
    return {all.begin(), all.end()};
}

CostTable parse_cost_table(std::string_view text) {
    CostTable table;
    for (const auto& line : tokenize_lines(text)) {
        const std::string& kw = line.tokens[0].text;
        auto detection_at = [&](std::size_t i) {
            long long f = parse_int_token(line.tokens[i], line.number);
            long long idx = parse_int_token(line.tokens[i + 1], line.number);
            if (f <= 0) throw ParseError(line.number, line.tokens[i].column, "frame must be positive");
            if (idx < 0) throw ParseError(line.number, line.tokens[i + 1].column, "index must be non-negative");
            return Detection{static_cast<int>(f), static_cast<int>(idx)};
        };
        try {
            if (kw == "base" || kw == "lift") {
                if (line.tokens.size() != 6) throw ParseError(line.number, 1, "'" + kw + "' expects 5 arguments");
                Detection a = detection_at(1), b = detection_at(3);
                double c = parse_double_token(line.tokens[5], line.number);
                if (kw == "base") table.add_base(a, b, c);
                else table.add_lifted(a, b, c);
            } else if (kw == "gt") {
                if (line.tokens.size() != 4) throw ParseError(line.number, 1, "'gt' expects 3 arguments");
                Detection d = detection_at(1);
                long long label = parse_int_token(line.tokens[3], line.number);
                if (!table.labels.emplace(d, static_cast<int>(label)).second)
                    throw ParseError(line.number, 1, "duplicate label for " + format_detection(d));
            } else {
                throw ParseError(line.number, 1, "unknown directive '" + kw + "'");
            }
        } catch (const TrackingError& e) {
            throw ParseError(line.number, 1, e.what());
        }
    }
    return table;
}

std::string format_cost_table(const CostTable& table) {
    std::string out;
    auto pair_line = [&](const char* kw, const PairKey& key, double c) {
        out += std::string(kw) + " " + std::to_string(key.first.frame) + " " + std::to_string(key.first.index) + " " +
               std::to_string(key.second.frame) + " " + std::to_string(key.second.index) + " " + format_exact(c) + "\n";
    };
    for (const auto& [key, c] : table.base) pair_line("base", key, c);
    for (const auto& [key, c] : table.lifted) pair_line("lift", key, c);
    for (const auto& [d, label] : table.labels)
        out += "gt " + std::to_string(d.frame) + " " + std::to_string(d.index) + " " + std::to_string(label) + "\n";
    return out;
}

bool TrackingConfig::keeps_lifted_gap(int gap) const {
    if (!lifted_gap_strides) return true;
    const int half_second = std::max(1, fps / 2);
    if (gap <= half_second) return true;
    if (gap <= fps) return gap % 2 == 0;
    return gap % 3 == 0;
}

IntervalGraph build_interval_graph(const CostTable& costs, int first_frame, int last_frame,
                                   const TrackingConfig& config) {
    if (first_frame > last_frame) throw TrackingError("empty frame range");
    std::vector<Detection> nodes;
    for (const Detection& d : costs.detections())
        if (d.frame >= first_frame && d.frame <= last_frame) nodes.push_back(d);
    if (nodes.empty())
        throw TrackingError("no detections in frames " + std::to_string(first_frame) + "-" + std::to_string(last_frame));
    std::map<Detection, int> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = static_cast<int>(i);
    const int max_gap = config.max_gap();

    InstanceSpec spec;
    spec.num_nodes = static_cast<int>(nodes.size());
    std::vector<int> frames;
    for (const Detection& d : nodes) frames.push_back(d.frame - first_frame + 1);
    spec.frames = frames;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        NodeId v = NodeId::inner(static_cast<int>(i));
        spec.base_edges.push_back({NodeId::source(), v, 0.0});
        spec.base_edges.push_back({v, NodeId::sink(), 0.0});
        // K lowest-cost successors in every later frame within the gap.
        std::map<int, std::vector<std::pair<double, int>>> by_frame;
        for (auto it = entries_from(costs.base, nodes[i]); it != costs.base.end() && it->first.first == nodes[i]; ++it) {
            const Detection& to = it->first.second;
            if (to.frame > last_frame || to.frame - nodes[i].frame > max_gap) continue;
            by_frame[to.frame].push_back({it->second, id.at(to)});
        }
        for (auto& [frame, cands] : by_frame) {
            std::sort(cands.begin(), cands.end());
            const int keep = std::min<int>(config.k_nearest, static_cast<int>(cands.size()));
            for (int c = 0; c < keep; ++c) spec.base_edges.push_back({v, NodeId::inner(cands[c].second), cands[c].first});
        }
    }
    Instance base_only(spec);
    int dropped = 0;
    for (const auto& [key, c] : costs.lifted) {
        const auto& [a, b] = key;
        if (a.frame < first_frame || b.frame > last_frame) continue;
        const int gap = b.frame - a.frame;
        if (gap > max_gap || std::abs(c) < config.lift_epsilon || !config.keeps_lifted_gap(gap)) continue;
        NodeId u = NodeId::inner(id.at(a)), w = NodeId::inner(id.at(b));
        if (!base_only.reachable(u, w)) {
            ++dropped;
            continue;
        }
        spec.lifted_edges.push_back({u, w, c});
    }
    return IntervalGraph{Instance(std::move(spec)), std::move(nodes), dropped};
}

double track_cost(const CostTable& costs, const std::vector<Detection>& track, int max_gap) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < track.size(); ++i) {
        auto c = costs.base_cost(track[i], track[i + 1]);
        if (!c)
            throw TrackingError("no base cost between consecutive detections " + format_detection(track[i]) + " and " +
                                format_detection(track[i + 1]));
        sum += *c;
    }
    for (std::size_t i = 0; i < track.size(); ++i)
        for (std::size_t j = i + 1; j < track.size() && track[j].frame - track[i].frame <= max_gap; ++j)
            if (auto c = costs.lifted_cost(track[i], track[j])) sum += *c;
    return sum;
}

Tracklet make_tracklet(const CostTable& costs, std::vector<Detection> detections, int max_gap) {
    for (std::size_t i = 0; i + 1 < detections.size(); ++i)
        if (detections[i + 1].frame <= detections[i].frame)
            throw TrackingError("tracklet detections must have increasing frames");
    double c = track_cost(costs, detections, max_gap);
    return Tracklet{std::move(detections), c};
}

TrackSet make_track_set(const CostTable& costs, std::vector<std::vector<Detection>> tracks, int max_gap) {
    std::sort(tracks.begin(), tracks.end());
    TrackSet out;
    for (const auto& t : tracks) out.objective += track_cost(costs, t, max_gap);
    out.tracks = std::move(tracks);
    return out;
}

std::string format_tracks(const TrackSet& tracks) {
    std::string out;
    for (std::size_t i = 0; i < tracks.tracks.size(); ++i) {
        out += "track " + std::to_string(i + 1) + ":";
        for (const Detection& d : tracks.tracks[i]) out += " " + format_detection(d);
        out += "\n";
    }
    return out;
}

FirstStepResult solve_first_step(const CostTable& costs, const TrackingConfig& config) {
    if (config.interval_length < 1) throw TrackingError("interval length must be at least 1");
    std::vector<Detection> all = costs.detections();
    if (all.empty()) throw TrackingError("cost table has no detections");
    const int first = all.front().frame, last = all.back().frame;
    std::vector<std::pair<int, int>> ranges;
    for (int f = first; f <= last; f += config.interval_length) {
        int to = std::min(last, f + config.interval_length - 1);
        bool occupied = std::any_of(all.begin(), all.end(), [&](const Detection& d) { return d.frame >= f && d.frame <= to; });
        if (occupied) ranges.emplace_back(f, to);
    }
    const int count = static_cast<int>(ranges.size());
    std::vector<IntervalReport> reports(count);
    std::vector<std::vector<Tracklet>> found(count);
    std::vector<std::string> errors(count);
    std::vector<char> limited(count, 0);
    std::atomic<int> next{0};
    SolveConfig solver = config.solver;
    solver.trace = nullptr;

    auto work = [&] {
        for (int k = next++; k < count; k = next++) {
            try {
                IntervalGraph g = build_interval_graph(costs, ranges[k].first, ranges[k].second, config);
                SolveOutcome out = solve(g.instance, solver);
                if (out.status != SolveStatus::optimal)
                    throw SolverLimit(std::string("solver stopped: ") + to_string(out.status));
                IntervalReport& r = reports[k];
                r = {k + 1, ranges[k].first, ranges[k].second, g.instance.num_nodes(),
                     static_cast<int>(g.instance.base_edges().size()), static_cast<int>(g.instance.lifted_edges().size()),
                     out.rounds_used, out.solution.objective};
                std::vector<char> covered(g.nodes.size(), 0);
                for (const auto& path : active_st_paths(g.instance, out.solution)) {
                    std::vector<Detection> dets;
                    for (NodeId v : path) {
                        covered[v.value] = 1;
                        dets.push_back(g.nodes[v.value]);
                    }
                    found[k].push_back(make_tracklet(costs, std::move(dets), config.max_gap()));
                }
                for (std::size_t v = 0; v < g.nodes.size(); ++v)
                    if (!covered[v]) found[k].push_back(make_tracklet(costs, {g.nodes[v]}, config.max_gap()));
            } catch (const SolverLimit& e) {
                errors[k] = e.what();
                limited[k] = 1;
            } catch (const std::exception& e) {
                errors[k] = e.what();
            }
        }
    };
    const int threads = std::max(1, std::min(config.jobs, count));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (int k = 0; k < count; ++k) {
        if (errors[k].empty()) continue;
        std::string message = "interval " + std::to_string(k + 1) + " (frames " + std::to_string(ranges[k].first) +
                              "-" + std::to_string(ranges[k].second) + "): " + errors[k];
        if (limited[k]) throw SolverLimit(message);
        throw TrackingError(message);
    }
    FirstStepResult result;
    result.intervals = std::move(reports);
    for (auto& group : found)
        for (auto& t : group) result.tracklets.push_back(std::move(t));
    std::sort(result.tracklets.begin(), result.tracklets.end(),
              [](const Tracklet& a, const Tracklet& b) { return a.detections < b.detections; });
    return result;
}

Instance build_tracklet_graph(const std::vector<Tracklet>& tracklets, const CostTable& costs,
                              const TrackingConfig& config) {
    const int max_gap = config.max_gap();
    std::set<Detection> seen;
    for (const auto& t : tracklets) {
        if (t.detections.empty()) throw TrackingError("empty tracklet");
        for (const Detection& d : t.detections)
            if (!seen.insert(d).second) throw TrackingError("overlapping tracklets at " + format_detection(d));
    }
    const int n = static_cast<int>(tracklets.size());
    InstanceSpec spec;
    spec.num_nodes = n;
    for (const auto& t : tracklets) spec.node_costs.push_back(track_cost(costs, t.detections, max_gap));
    for (int a = 0; a < n; ++a) {
        spec.base_edges.push_back({NodeId::source(), NodeId::inner(a), 0.0});
        spec.base_edges.push_back({NodeId::inner(a), NodeId::sink(), 0.0});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Detection& last = tracklets[a].detections.back();
            const Detection& first = tracklets[b].detections.front();
            if (first.frame <= last.frame || first.frame - last.frame > max_gap) continue;
            if (auto c = costs.base_cost(last, first)) spec.base_edges.push_back({NodeId::inner(a), NodeId::inner(b), *c});
        }
    Instance base_only(spec);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !base_only.reachable(NodeId::inner(a), NodeId::inner(b))) continue;
            double sum = cross_lifted(costs, tracklets[a].detections, tracklets[b].detections, max_gap);
            if (sum != 0.0) spec.lifted_edges.push_back({NodeId::inner(a), NodeId::inner(b), sum});
        }
    return Instance(std::move(spec));
}

std::vector<std::pair<int, double>> improving_splits(const CostTable& costs, const std::vector<Detection>& track,
                                                     int max_gap) {
    const int n = static_cast<int>(track.size());
    std::vector<std::pair<int, double>> out;
    if (n < 2) return out;
    // cross = lifted cost between track[0..p) and track[p..n), updated as p moves right.
    double cross = 0.0;
    auto lifted = [&](int i, int j) {
        if (track[j].frame - track[i].frame > max_gap) return 0.0;
        return costs.lifted_cost(track[i], track[j]).value_or(0.0);
    };
    for (int j = 1; j < n; ++j) cross += lifted(0, j);
    for (int p = 1; p < n; ++p) {
        double delta = -costs.base_cost(track[p - 1], track[p]).value_or(0.0) - cross;
        if (delta < -split_tolerance) out.emplace_back(p, delta);
        // Moving track[p] to the left part.
        for (int i = 0; i < p; ++i) cross -= lifted(i, p);
        for (int j = p + 1; j < n; ++j) cross += lifted(p, j);
    }
    return out;
}

namespace {

std::vector<std::vector<Detection>> cut_track(const std::vector<Detection>& track, const std::vector<int>& cuts) {
    std::vector<std::vector<Detection>> pieces;
    int from = 0;
    for (int c : cuts) {
        pieces.emplace_back(track.begin() + from, track.begin() + c);
        from = c;
    }
    pieces.emplace_back(track.begin() + from, track.end());
    return pieces;
}

}  // namespace

SecondStepResult solve_second_step(std::vector<Tracklet> tracklets, const CostTable& costs,
                                   const TrackingConfig& config) {
    const int max_gap = config.max_gap();
    SecondStepResult result;
    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        std::sort(tracklets.begin(), tracklets.end(),
                  [](const Tracklet& a, const Tracklet& b) { return a.detections < b.detections; });
        Instance graph = build_tracklet_graph(tracklets, costs, config);
        SolveConfig solver = config.solver;
        SolveOutcome out = solve(graph, solver);
        if (out.status != SolveStatus::optimal)
            throw SolverLimit("second step iteration " + std::to_string(iteration) +
                                ": solver stopped: " + to_string(out.status));
        std::vector<std::vector<Detection>> tracks;
        std::vector<char> used(tracklets.size(), 0);
        for (const auto& path : active_st_paths(graph, out.solution)) {
            std::vector<Detection> track;
            for (NodeId v : path) {
                used[v.value] = 1;
                const auto& dets = tracklets[v.value].detections;
                track.insert(track.end(), dets.begin(), dets.end());
            }
            tracks.push_back(std::move(track));
        }
        TrackSet current = make_track_set(costs, tracks, max_gap);
        result.iterations = iteration;
        // Without a strict improvement over the previous solve the previous
        // tracks are kept.
        if (iteration > 1 && current.objective > result.objective_trace.back() - split_tolerance) break;
        result.objective_trace.push_back(current.objective);
        result.tracks = current;

        // Split every track at its improving cut points when the cuts together
        // still improve, otherwise at its single best cut point.
        std::vector<std::vector<Detection>> next;
        int splits = 0;
        for (const auto& track : current.tracks) {
            auto candidates = improving_splits(costs, track, max_gap);
            if (candidates.empty()) {
                next.push_back(track);
                continue;
            }
            std::vector<int> cuts;
            for (auto [p, d] : candidates) cuts.push_back(p);
            auto pieces = cut_track(track, cuts);
            double together = -track_cost(costs, track, max_gap);
            for (const auto& piece : pieces) together += track_cost(costs, piece, max_gap);
            if (together >= -split_tolerance) {
                auto best = std::min_element(candidates.begin(), candidates.end(),
                                             [](const auto& a, const auto& b) { return a.second < b.second; });
                cuts = {best->first};
                pieces = cut_track(track, cuts);
            }
            splits += static_cast<int>(cuts.size());
            for (auto& piece : pieces) next.push_back(std::move(piece));
        }
        if (splits == 0) {
            result.converged = true;
            break;
        }
        result.splits_applied += splits;
        result.tracks = make_track_set(costs, next, max_gap);
        // The next iteration works on the split tracks plus the unused tracklets.
        std::vector<Tracklet> following;
        for (auto& t : next) following.push_back(make_tracklet(costs, std::move(t), max_gap));
        for (std::size_t i = 0; i < tracklets.size(); ++i)
            if (!used[i]) following.push_back(tracklets[i]);
        tracklets = std::move(following);
    }
    result.tracklets = tracklets;
    return result;
}

TrackingResult run_tracking(const CostTable& costs, const TrackingConfig& config) {
    TrackingResult r;
    r.first = solve_first_step(costs, config);
    r.second = solve_second_step(r.first.tracklets, costs, config);
    return r;
}

std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight) {
    const int rows = static_cast<int>(weight.size());
    int cols = 0;
    for (const auto& r : weight) cols = std::max(cols, static_cast<int>(r.size()));
    const int n = std::max(rows, cols);
    std::vector<int> result(rows, -1);
    if (n == 0) return result;
    // Hungarian method with potentials on the square cost matrix -weight.
    auto cost = [&](int r, int c) {
        if (r >= rows || c >= static_cast<int>(weight[r].size())) return 0.0;
        return -weight[r][c];
    };
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);  // match[col] = row, 1-based
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> done(n + 1, 0);
        do {
            done[j0] = 1;
            int i0 = match[j0], j1 = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (done[j]) continue;
                double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (done[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }
    for (int j = 1; j <= n; ++j) {
        int r = match[j] - 1;
        if (r >= 0 && r < rows && j - 1 < static_cast<int>(weight[r].size()) && weight[r][j - 1] > 0.0)
            result[r] = j - 1;
    }
    return result;
}

TrackingMetrics score_assignment(const TrackSet& tracks, const std::map<Detection, int>& labels) {
    TrackingMetrics m;
    std::map<Detection, int> track_of;
    for (std::size_t t = 0; t < tracks.tracks.size(); ++t)
        for (const Detection& d : tracks.tracks[t]) track_of[d] = static_cast<int>(t);

    std::map<int, std::vector<Detection>> objects;  // label -> detections in frame order
    for (const auto& [d, label] : labels)
        if (label >= 0) objects[label].push_back(d);
    for (const auto& [d, t] : track_of) {
        auto it = labels.find(d);
        if (it == labels.end()) {
            ++m.unlabeled;
            continue;
        }
        ++m.predicted_detections;
        if (it->second < 0) ++m.false_positives;
    }
    std::vector<int> object_ids;
    for (auto& [label, dets] : objects) {
        object_ids.push_back(label);
        m.gt_detections += static_cast<int>(dets.size());
        int last_track = -1;
        for (const Detection& d : dets) {
            auto it = track_of.find(d);
            if (it == track_of.end()) {
                ++m.false_negatives;
                continue;
            }
            if (last_track >= 0 && it->second != last_track) ++m.id_switches;
            last_track = it->second;
        }
    }
    m.mota = m.gt_detections == 0
                 ? 1.0
                 : 1.0 - static_cast<double>(m.false_negatives + m.false_positives + m.id_switches) / m.gt_detections;

    // Identity matching between objects and tracks.
    std::vector<std::vector<double>> overlap(object_ids.size(), std::vector<double>(tracks.tracks.size(), 0.0));
    for (std::size_t o = 0; o < object_ids.size(); ++o)
        for (const Detection& d : objects[object_ids[o]]) {
            auto it = track_of.find(d);
            if (it != track_of.end()) overlap[o][it->second] += 1.0;
        }
    auto assignment = max_weight_assignment(overlap);
    for (std::size_t o = 0; o < object_ids.size(); ++o)
        if (assignment[o] >= 0) m.idtp += static_cast<int>(overlap[o][assignment[o]]);
    m.idp = m.predicted_detections == 0 ? 1.0 : static_cast<double>(m.idtp) / m.predicted_detections;
    m.idr = m.gt_detections == 0 ? 1.0 : static_cast<double>(m.idtp) / m.gt_detections;
    const int denom = m.gt_detections + m.predicted_detections;
    m.idf1 = denom == 0 ? 1.0 : 2.0 * m.idtp / denom;

    int predicted_links = 0, correct_links = 0, gt_links = 0;
    for (const auto& [label, dets] : objects) gt_links += static_cast<int>(dets.size()) - 1;
    for (const auto& track : tracks.tracks)
        for (std::size_t i = 0; i + 1 < track.size(); ++i) {
            auto a = labels.find(track[i]), b = labels.find(track[i + 1]);
            if (a == labels.end() || b == labels.end()) continue;
            ++predicted_links;
            if (a->second >= 0 && a->second == b->second) ++correct_links;
        }
    m.link_precision = predicted_links == 0 ? 1.0 : static_cast<double>(correct_links) / predicted_links;
    m.link_recall = gt_links == 0 ? 1.0 : static_cast<double>(correct_links) / gt_links;
    return m;
}

}  // namespace ldp
