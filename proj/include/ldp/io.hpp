#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldp/instance.hpp"
#include "ldp/solution.hpp"

namespace ldp {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Whitespace-separated tokens with '#' comments, tracking line and column.
struct Token {
    std::string text;
    int column = 0;
};

struct TokenLine {
    int number = 0;
    std::vector<Token> tokens;
};

std::vector<TokenLine> tokenize_lines(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Shortest decimal text that parses back to the same double.
std::string format_exact(double value);
// Nine significant digits, used for reported results.
std::string format_result(double value);

double parse_double_token(const Token& token, int line);
long long parse_int_token(const Token& token, int line);

// Instance file. Semantic problems (cycles, unreachable nodes, lifted edges
// without a base path) surface as InstanceError; syntax problems as ParseError.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& instance);

struct SolutionFile {
    double objective = 0.0;
    std::vector<std::vector<NodeId>> paths;
};

SolutionFile parse_solution(std::string_view text);
std::string serialize_solution(const Instance& instance, const FlowSolution& solution);

}  // namespace ldp
