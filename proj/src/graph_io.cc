#include "lexidis/graph_io.hpp"

#include <charconv>
#include <limits>
#include <vector>

namespace lexidis
{

namespace
{

struct LineReader
{
  std::string_view text;
  std::size_t pos = 0;
  std::size_t number = 0;

  // Next line that is neither blank nor a comment.
  bool next(std::string_view &line)
  {
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos)
        end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++number;
      if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
      auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#')
        continue;
      line.remove_prefix(first);
      return true;
    }
    return false;
  }
};

std::vector<std::string_view> tokens(std::string_view line)
{
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line, char const *what)
{
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") +
                               what + ", got '" + std::string(tok) + "'");
  return value;
}

Vertex to_vertex(std::string_view tok, std::size_t line, char const *what)
{
  auto v = to_uint(tok, line, what);
  if (v > std::numeric_limits<Vertex>::max())
    throw ParseError(line, std::string(what) + " too large");
  return Vertex(v);
}

constexpr int kBias = 63;

} // namespace

Graph parse_edge_list(std::string_view text)
{
  LineReader in{text};
  std::string_view line;
  if (!in.next(line))
    throw ParseError(in.number, "missing 'p <n> <m>' header");

  auto head = tokens(line);
  if (head.size() != 3 || head[0] != "p")
    throw ParseError(in.number, "expected 'p <n> <m>'");
  Vertex n = to_vertex(head[1], in.number, "vertex count");
  auto m = to_uint(head[2], in.number, "edge count");

  std::vector<Edge> edges;
  while (in.next(line)) {
    auto tok = tokens(line);
    if (tok.size() != 3 || tok[0] != "e")
      throw ParseError(in.number, "expected 'e <u> <v>'");
    Vertex u = to_vertex(tok[1], in.number, "endpoint");
    Vertex v = to_vertex(tok[2], in.number, "endpoint");
    if (u >= n || v >= n)
      throw ParseError(in.number, "endpoint out of range for n = " + std::to_string(n));
    if (u >= v)
      throw ParseError(in.number, "edge endpoints must satisfy u < v");
    edges.push_back({u, v});
  }
  if (edges.size() != m)
    throw ParseError(in.number, "header announces " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(n, edges);
  } catch (std::invalid_argument const &e) {
    throw ParseError(in.number, e.what());
  }
}

std::string write_edge_list(Graph const &g)
{
  std::string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto const &e : g.edges())
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text)
{
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);

  for (char c : text)
    if (c < 63 || c > 126)
      throw ParseError(1, "graph6 byte out of range 63..126");
  if (text.empty())
    throw ParseError(1, "empty graph6 string");

  std::size_t pos = 0;
  auto read_digits = [&](int count) {
    if (pos + count > text.size())
      throw ParseError(1, "truncated graph6 size field");
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i)
      value = (value << 6) | std::uint64_t(text[pos++] - kBias);
    return value;
  };

  std::uint64_t n;
  if (text[0] != 126) {
    n = std::uint64_t(text[0] - kBias);
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    pos = 1;
    n = read_digits(3);
  } else {
    pos = 2;
    n = read_digits(6);
  }
  if (n > std::numeric_limits<Vertex>::max())
    throw ParseError(1, "graph6 order exceeds the vertex index type");

  std::uint64_t bits = n * (n - (n > 0)) / 2;
  std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError(1, "graph6 body has " + std::to_string(text.size() - pos) +
                            " bytes, expected " + std::to_string(bytes));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int chunk = text[pos + k / 6] - kBias;
      if ((chunk >> (5 - k % 6)) & 1)
        edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k)
    if (((text[pos + k / 6] - kBias) >> (5 - k % 6)) & 1)
      throw ParseError(1, "graph6 padding bits must be zero");
  return Graph(Vertex(n), edges);
}

std::string write_graph6(Graph const &g)
{
  std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(char(((n >> s) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6)
      out.push_back(char(((n >> s) & 63) + kBias));
  }

  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | int(g.adjacent(i, j));
      if (++filled == 6) {
        out.push_back(char(chunk + kBias));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(char((chunk << (6 - filled)) + kBias));
  return out;
}

GraphFormat sniff_format(std::string_view text)
{
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return GraphFormat::Graph6;
  // 'p' also opens graph6 strings of order 49; only the edge-list header has a blank after it
  if (text[first] == '#' ||
      (text[first] == 'p' && first + 1 < text.size() && (text[first + 1] == ' ' || text[first + 1] == '\t')))
    return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text)
{
  if (sniff_format(text) == GraphFormat::EdgeList)
    return parse_edge_list(text);
  auto first = text.find_first_not_of(" \t\r\n");
  return parse_graph6(first == std::string_view::npos ? text : text.substr(first));
}

std::string write_graph(Graph const &g, GraphFormat fmt)
{
  return fmt == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

Labeling parse_labeling(std::string_view text, Graph const &g)
{
  LineReader in{text};
  std::string_view line;
  char kind = 0;
  std::vector<Label> labels;
  std::vector<bool> seen;

  while (in.next(line)) {
    auto tok = tokens(line);
    if (tok.empty() || (tok[0] != "v" && tok[0] != "e"))
      throw ParseError(in.number, "expected 'v <index> <label>' or 'e <u> <v> <label>'");
    char k = tok[0][0];
    if (kind == 0) {
      kind = k;
      std::size_t domain = kind == 'v' ? g.order() : g.size();
      labels.assign(domain, 0);
      seen.assign(domain, false);
    } else if (k != kind) {
      throw ParseError(in.number, "vertex and edge labels mixed in one file");
    }

    std::size_t slot;
    std::uint64_t label;
    if (kind == 'v') {
      if (tok.size() != 3)
        throw ParseError(in.number, "expected 'v <index> <label>'");
      auto v = to_uint(tok[1], in.number, "vertex");
      if (v >= g.order())
        throw ParseError(in.number, "vertex " + std::to_string(v) + " out of range");
      slot = std::size_t(v);
      label = to_uint(tok[2], in.number, "label");
    } else {
      if (tok.size() != 4)
        throw ParseError(in.number, "expected 'e <u> <v> <label>'");
      auto u = to_uint(tok[1], in.number, "endpoint");
      auto v = to_uint(tok[2], in.number, "endpoint");
      std::optional<std::size_t> idx;
      if (u < g.order() && v < g.order())
        idx = g.edge_index(Vertex(u), Vertex(v));
      if (!idx)
        throw ParseError(in.number, "{" + std::to_string(u) + ", " +
                                        std::to_string(v) + "} is not an edge");
      slot = *idx;
      label = to_uint(tok[3], in.number, "label");
    }
    if (label == 0 || label > std::numeric_limits<Label>::max())
      throw ParseError(in.number, "labels must be positive 32-bit integers");
    if (seen[slot])
      throw ParseError(in.number, "item labeled twice");
    seen[slot] = true;
    labels[slot] = Label(label);
  }

  if (kind == 0) {
    if (g.order() == 0)
      return VertexLabeling{};
    throw ParseError(in.number, "labeling file has no entries");
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw ParseError(in.number, std::string(kind == 'v' ? "vertex " : "edge #") +
                                      std::to_string(i) + " has no label");
  if (kind == 'v')
    return VertexLabeling{std::move(labels)};
  return EdgeLabeling{std::move(labels)};
}

std::string write_labeling(Graph const &g, VertexLabeling const &l)
{
  validate(g, l);
  std::string out;
  for (Vertex v = 0; v < g.order(); ++v)
    out += "v " + std::to_string(v) + " " + std::to_string(l.labels[v]) + "\n";
  return out;
}

std::string write_labeling(Graph const &g, EdgeLabeling const &l)
{
  validate(g, l);
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto const &e = g.edges()[i];
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(l.labels[i]) + "\n";
  }
  return out;
}

} // namespace lexidis
