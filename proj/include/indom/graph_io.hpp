#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "indom/graph.hpp"

namespace indom {

// edge-list: header "n m", then m lines "u v".
// dimacs:    header "p n m" (an optional format word such as "edge" may
//            precede n), then m lines "e u v".
// Both are 0-based and ignore blank lines and comments ('#' anywhere,
// plus whole-line 'c' comments in dimacs).
enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

Graph parse_graph(std::string_view text, GraphFormat format);
// Edges are written once each as u < v in lexicographic order.
std::string serialize_graph(const Graph& g, GraphFormat format);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Splits text into lines with '#' comments removed and whitespace tokens
// split; blank lines are dropped. Line numbers are 1-based.
struct TokenLine {
  int number;
  std::vector<std::string> tokens;
};
std::vector<TokenLine> tokenize_lines(std::string_view text);

// Parses a non-negative or signed integer token, throwing ParseError.
long long parse_integer(const std::string& token, int line);

}  // namespace indom
