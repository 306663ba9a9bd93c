#ifndef LEXIDIS_GRAPH_HPP
#define LEXIDIS_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lexidis
{

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge
{
  Vertex u;
  Vertex v;

  friend auto operator<=>(Edge const &, Edge const &) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Adjacency is kept twice: sorted neighbor
/// lists for iteration and fixed-width bit rows for O(1) adjacency tests
/// and popcount-style queries in the automorphism search.
class Graph
{
public:
  Graph() = default;
  explicit Graph(Vertex n);

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints. Endpoints may be given in either order.
  Graph(Vertex n, std::span<Edge const> edges);
  Graph(Vertex n, std::initializer_list<Edge> edges)
  : Graph(n, std::span<Edge const>(edges.begin(), edges.size()))
  {}

  Vertex order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges in ascending (u, v) order; this is the canonical edge index.
  std::vector<Edge> const &edges() const { return edges_; }

  std::span<Vertex const> adjacency(Vertex v) const
  { return {adj_[v].data(), adj_[v].size()}; }

  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool adjacent(Vertex u, Vertex v) const
  { return (bits_[u * words_ + (v >> 6)] >> (v & 63u)) & 1u; }

  std::span<std::uint64_t const> bit_row(Vertex v) const
  { return {bits_.data() + std::size_t(v) * words_, words_}; }

  std::size_t row_words() const { return words_; }

  /// Position of {u, v} in edges(), if it is an edge.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  friend bool operator==(Graph const &a, Graph const &b)
  { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  Vertex n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

/// Ordered list of disjoint non-empty vertex classes covering 0..n-1.
/// Classes are sorted internally and ordered by their smallest vertex.
struct VertexPartition
{
  std::vector<std::vector<Vertex>> classes;

  /// True when every class is a singleton (the relation is the diagonal).
  bool is_discrete() const;

  friend bool operator==(VertexPartition const &, VertexPartition const &) = default;
};

std::vector<Vertex> neighbors(Graph const &g, Vertex v);
std::vector<Vertex> closed_neighbors(Graph const &g, Vertex v);

/// Classes of equal open neighborhoods.
VertexPartition relation_R(Graph const &g);
/// Classes of equal closed neighborhoods.
VertexPartition relation_S(Graph const &g);

Graph complement(Graph const &g);
bool is_connected(Graph const &g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(Graph const &g);

// Standard families. Indexing:
//   path(n):     0-1-...-(n-1)
//   cycle(n):    path plus {0, n-1}
//   star(n):     K_{1,n}, center 0, leaves 1..n
//   spider(n):   K_{1,n} with every edge subdivided; center 0, branch j
//                (1-based) is 0 - (2j-1) - (2j)
Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete(Vertex n);
Graph star(Vertex n);
Graph spider(Vertex n);

} // namespace lexidis

#endif // LEXIDIS_GRAPH_HPP
