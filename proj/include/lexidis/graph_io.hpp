#ifndef LEXIDIS_GRAPH_IO_HPP
#define LEXIDIS_GRAPH_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "lexidis/graph.hpp"
#include "lexidis/labeling.hpp"

namespace lexidis
{

class ParseError : public std::runtime_error
{
public:
  ParseError(std::size_t line, std::string const &what)
  : std::runtime_error("line " + std::to_string(line) + ": " + what),
    line_(line)
  {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list text:
//   p <n> <m>
//   e <u> <v>      (m lines, 0-based, u < v)
// Lines starting with '#' and blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(Graph const &g);

/// graph6, all three header sizes. An optional ">>graph6<<" prefix and
/// trailing newline are accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(Graph const &g);

/// Sniffs the format from the first significant byte: '#', or 'p' followed
/// by a blank, means edge list, anything else graph6.
GraphFormat sniff_format(std::string_view text);
Graph parse_graph(std::string_view text);
std::string write_graph(Graph const &g, GraphFormat fmt);

// Labeling files: lines "v <index> <label>" or "e <u> <v> <label>", one kind
// per file, '#' comments allowed.
using Labeling = std::variant<VertexLabeling, EdgeLabeling>;

Labeling parse_labeling(std::string_view text, Graph const &g);
std::string write_labeling(Graph const &g, VertexLabeling const &l);
std::string write_labeling(Graph const &g, EdgeLabeling const &l);

} // namespace lexidis

#endif // LEXIDIS_GRAPH_IO_HPP
