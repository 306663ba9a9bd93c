#ifndef LEXIDIS_LABELING_HPP
#define LEXIDIS_LABELING_HPP

#include <cstdint>
#include <vector>

#include "lexidis/graph.hpp"

namespace lexidis
{

using Label = std::uint32_t;

/// labels[v] is the label of vertex v; labels are positive.
struct VertexLabeling
{
  std::vector<Label> labels;

  /// Largest label in use (0 for the empty labeling).
  Label label_count() const;
  /// Number of distinct label values in use.
  std::size_t distinct() const;

  friend bool operator==(VertexLabeling const &, VertexLabeling const &) = default;
};

/// labels[i] labels graph.edges()[i] of the graph it belongs to.
struct EdgeLabeling
{
  std::vector<Label> labels;

  Label label_count() const;
  std::size_t distinct() const;

  Label at(Graph const &g, Vertex u, Vertex v) const;

  friend bool operator==(EdgeLabeling const &, EdgeLabeling const &) = default;
};

/// Throws std::invalid_argument unless `l` covers g's vertices with
/// positive labels.
void validate(Graph const &g, VertexLabeling const &l);
void validate(Graph const &g, EdgeLabeling const &l);

/// Relabels values onto 1..k by rank, preserving their order.
VertexLabeling compress(VertexLabeling const &l);
EdgeLabeling compress(EdgeLabeling const &l);

} // namespace lexidis

#endif // LEXIDIS_LABELING_HPP
