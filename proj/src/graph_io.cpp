#include "indom/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "indom/error.hpp"

namespace indom {

GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw InvalidInput("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) { return f == GraphFormat::EdgeList ? "edge-list" : "dimacs"; }

std::vector<TokenLine> tokenize_lines(std::string_view text) {
  std::vector<TokenLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    TokenLine tl{number, {}};
    for (std::string tok; in >> tok;) tl.tokens.push_back(std::move(tok));
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

long long parse_integer(const std::string& token, int line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(line, "expected an integer, got '" + token + "'");
  return value;
}

namespace {

Vertex parse_vertex(const std::string& token, long long n, int line) {
  const long long v = parse_integer(token, line);
  if (v < 0 || v >= n) throw ParseError(line, "vertex " + token + " out of range for n=" + std::to_string(n));
  return static_cast<Vertex>(v);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  auto lines = tokenize_lines(text);
  if (format == GraphFormat::Dimacs) {
    std::erase_if(lines, [](const TokenLine& l) { return l.tokens.front() == "c"; });
  }
  if (lines.empty()) throw ParseError(1, "missing header");

  const TokenLine& header = lines.front();
  long long n = 0;
  long long m = 0;
  if (format == GraphFormat::EdgeList) {
    if (header.tokens.size() != 2) throw ParseError(header.number, "header must be 'n m'");
    n = parse_integer(header.tokens[0], header.number);
    m = parse_integer(header.tokens[1], header.number);
  } else {
    const auto& t = header.tokens;
    if (t.front() != "p" || (t.size() != 3 && t.size() != 4)) throw ParseError(header.number, "header must be 'p n m'");
    n = parse_integer(t[t.size() - 2], header.number);
    m = parse_integer(t[t.size() - 1], header.number);
  }
  if (n < 0 || m < 0) throw ParseError(header.number, "negative count in header");
  if (n > kMaxVertices) throw ParseError(header.number, "vertex count exceeds limit");

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const TokenLine& l = lines[i];
    std::size_t off = 0;
    if (format == GraphFormat::Dimacs) {
      if (l.tokens.front() != "e") throw ParseError(l.number, "expected 'e u v'");
      off = 1;
    }
    if (l.tokens.size() != off + 2) throw ParseError(l.number, "expected two endpoints");
    const Vertex u = parse_vertex(l.tokens[off], n, l.number);
    const Vertex v = parse_vertex(l.tokens[off + 1], n, l.number);
    if (u == v) throw ParseError(l.number, "self-loop on vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (static_cast<long long>(edges.size()) != m) {
    const int at = lines.back().number;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  const auto edges = g.edges();
  if (format == GraphFormat::EdgeList) {
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  } else {
    out << "p " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u << ' ' << v << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

}  // namespace indom
