#include "ldp/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ldp {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::vector<TokenLine> tokenize_lines(std::string_view text) {
    std::vector<TokenLine> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        TokenLine tl;
        tl.number = number;
        std::size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            if (c == '#') break;
            if (c == ' ' || c == '\t' || c == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
            tl.tokens.push_back(Token{std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (!tl.tokens.empty()) lines.push_back(std::move(tl));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string format_exact(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_result(double value) {
    if (value == 0.0) value = 0.0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

double parse_double_token(const Token& token, int line) {
    double value = 0.0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    if (first != last && *first == '+') ++first;
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value))
        throw ParseError(line, token.column, "expected a number, found '" + token.text + "'");
    return value;
}

long long parse_int_token(const Token& token, int line) {
    long long value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw ParseError(line, token.column, "expected an integer, found '" + token.text + "'");
    return value;
}

namespace {

void expect_arity(const TokenLine& line, std::size_t arity) {
    if (line.tokens.size() < arity) {
        const Token& last = line.tokens.back();
        throw ParseError(line.number, last.column + static_cast<int>(last.text.size()),
                         "'" + line.tokens[0].text + "' expects " + std::to_string(arity - 1) + " arguments");
    }
    if (line.tokens.size() > arity)
        throw ParseError(line.number, line.tokens[arity].column, "unexpected token '" + line.tokens[arity].text + "'");
}

NodeId parse_node(const Token& token, int line, int num_nodes) {
    if (token.text == "s") return NodeId::source();
    if (token.text == "t") return NodeId::sink();
    long long v = parse_int_token(token, line);
    if (v < 1 || v > num_nodes) throw ParseError(line, token.column, "unknown node " + token.text);
    return NodeId::inner(static_cast<std::int32_t>(v - 1));
}

NodeId parse_inner(const Token& token, int line, int num_nodes) {
    NodeId v = parse_node(token, line, num_nodes);
    if (!v.is_inner()) throw ParseError(line, token.column, "expected an inner node, found '" + token.text + "'");
    return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing 'ldp 1' header");
    const TokenLine& header = lines[0];
    if (header.tokens[0].text != "ldp") throw ParseError(header.number, 1, "missing 'ldp 1' header");
    expect_arity(header, 2);
    if (header.tokens[1].text != "1")
        throw ParseError(header.number, header.tokens[1].column, "unsupported format version " + header.tokens[1].text);

    InstanceSpec spec;
    bool have_nodes = false;
    std::vector<int> frames;
    std::vector<std::uint8_t> has_frame, has_cost;
    int frame_count = 0;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const TokenLine& line = lines[li];
        const std::string& kw = line.tokens[0].text;
        if (kw == "nodes") {
            if (have_nodes) throw ParseError(line.number, 1, "duplicate 'nodes' line");
            expect_arity(line, 2);
            long long n = parse_int_token(line.tokens[1], line.number);
            if (n < 0 || n > 100000000) throw ParseError(line.number, line.tokens[1].column, "invalid node count");
            spec.num_nodes = static_cast<int>(n);
            spec.node_costs.assign(n, 0.0);
            frames.assign(n, 0);
            has_frame.assign(n, 0);
            has_cost.assign(n, 0);
            have_nodes = true;
            continue;
        }
        if (!have_nodes) throw ParseError(line.number, 1, "'nodes' must precede '" + kw + "'");
        const int n = spec.num_nodes;
        if (kw == "frame") {
            expect_arity(line, 3);
            NodeId v = parse_inner(line.tokens[1], line.number, n);
            long long f = parse_int_token(line.tokens[2], line.number);
            if (f <= 0) throw ParseError(line.number, line.tokens[2].column, "frame must be positive");
            if (has_frame[v.value]) throw ParseError(line.number, 1, "duplicate frame for node " + to_string(v));
            has_frame[v.value] = 1;
            frames[v.value] = static_cast<int>(f);
            ++frame_count;
        } else if (kw == "ncost") {
            expect_arity(line, 3);
            NodeId v = parse_inner(line.tokens[1], line.number, n);
            if (has_cost[v.value]) throw ParseError(line.number, 1, "duplicate cost for node " + to_string(v));
            has_cost[v.value] = 1;
            spec.node_costs[v.value] = parse_double_token(line.tokens[2], line.number);
        } else if (kw == "base") {
            expect_arity(line, 4);
            NodeId u = parse_node(line.tokens[1], line.number, n);
            NodeId v = parse_node(line.tokens[2], line.number, n);
            if (u.is_sink()) throw ParseError(line.number, line.tokens[1].column, "base edge cannot leave t");
            if (v.is_source()) throw ParseError(line.number, line.tokens[2].column, "base edge cannot enter s");
            spec.base_edges.push_back({u, v, parse_double_token(line.tokens[3], line.number)});
        } else if (kw == "lift") {
            expect_arity(line, 4);
            NodeId u = parse_inner(line.tokens[1], line.number, n);
            NodeId v = parse_inner(line.tokens[2], line.number, n);
            spec.lifted_edges.push_back({u, v, parse_double_token(line.tokens[3], line.number)});
        } else if (kw == "ldp") {
            throw ParseError(line.number, 1, "duplicate header");
        } else {
            throw ParseError(line.number, 1, "unknown directive '" + kw + "'");
        }
    }
    if (!have_nodes) throw ParseError(lines.back().number, 1, "missing 'nodes' line");
    if (frame_count > 0) {
        if (frame_count != spec.num_nodes) throw InstanceError("frames must be given for all nodes or none");
        spec.frames = frames;
    }
    return Instance(std::move(spec));
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string serialize_instance(const Instance& instance) {
    std::string out = "ldp 1\nnodes " + std::to_string(instance.num_nodes()) + "\n";
    if (instance.has_frames())
        for (int v = 0; v < instance.num_nodes(); ++v)
            out += "frame " + std::to_string(v + 1) + " " + std::to_string((*instance.frames())[v]) + "\n";
    for (int v = 0; v < instance.num_nodes(); ++v)
        if (instance.node_costs()[v] != 0.0)
            out += "ncost " + std::to_string(v + 1) + " " + format_exact(instance.node_costs()[v]) + "\n";
    for (const auto& e : instance.base_edges())
        out += "base " + to_string(e.tail) + " " + to_string(e.head) + " " + format_exact(e.cost) + "\n";
    for (const auto& e : instance.lifted_edges())
        out += "lift " + to_string(e.tail) + " " + to_string(e.head) + " " + format_exact(e.cost) + "\n";
    return out;
}

SolutionFile parse_solution(std::string_view text) {
    auto lines = tokenize_lines(text);
    SolutionFile sol;
    bool have_objective = false;
    for (const auto& line : lines) {
        const std::string& kw = line.tokens[0].text;
        if (kw == "objective") {
            if (have_objective) throw ParseError(line.number, 1, "duplicate objective line");
            expect_arity(line, 2);
            sol.objective = parse_double_token(line.tokens[1], line.number);
            have_objective = true;
        } else if (kw == "path") {
            if (line.tokens.size() < 2) throw ParseError(line.number, 5, "empty path");
            std::vector<NodeId> path;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                long long v = parse_int_token(line.tokens[i], line.number);
                if (v < 1) throw ParseError(line.number, line.tokens[i].column, "invalid node " + line.tokens[i].text);
                path.push_back(NodeId::inner(static_cast<std::int32_t>(v - 1)));
            }
            sol.paths.push_back(std::move(path));
        } else {
            throw ParseError(line.number, 1, "unknown directive '" + kw + "'");
        }
    }
    if (!have_objective) throw ParseError(lines.empty() ? 1 : lines.back().number, 1, "missing objective line");
    return sol;
}

std::string serialize_solution(const Instance& instance, const FlowSolution& solution) {
    std::string out = "objective " + format_result(solution.objective) + "\n";
    for (const auto& path : active_st_paths(instance, solution)) {
        out += "path";
        for (NodeId v : path) out += " " + to_string(v);
        out += "\n";
    }
    return out;
}

}  // namespace ldp
