#ifndef LEXIDIS_AUTOSEARCH_HPP
#define LEXIDIS_AUTOSEARCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lexidis/graph.hpp"
#include "lexidis/labeling.hpp"
#include "lexidis/permutation.hpp"

namespace lexidis
{

using Color = std::uint64_t;

struct ColoredGraph
{
  Graph graph;
  std::vector<Color> color;
};

struct SearchStats
{
  std::uint64_t nodes_visited = 0;
  std::uint64_t refinements = 0;
  bool found = false;
};

struct SearchResult
{
  std::optional<Permutation> certificate;
  SearchStats stats;
};

// The search keeps an ordered partition refined to an equitable one
// (color, then neighbor counts per cell, iterated to a fixpoint). It
// individualizes the least vertex of the first smallest non-singleton cell
// and re-refines; the matching side branches over that cell in vertex
// order and is pruned as soon as its refinement trace diverges. Leaves are
// checked edge by edge, so every returned permutation is a verified
// automorphism.

/// Automorphism of `c.graph` preserving `c.color`, non-identity when
/// exclude_identity is set (the identity is returned otherwise). No
/// certificate means the coloring is distinguishing.
SearchResult find_preserving(ColoredGraph const &c, bool exclude_identity = true);

/// As above on a borrowed graph. With first_movable > 0 the search only
/// accepts automorphisms that move some vertex >= first_movable, and
/// reports absence when all of those are fixed; vertices below and above
/// the threshold must never share a color.
SearchResult find_preserving(Graph const &g, std::span<Color const> colors,
                             bool exclude_identity = true, Vertex first_movable = 0);

struct AutomorphismList
{
  std::vector<Permutation> elements;
  bool complete = true;
  /// Exact when complete, otherwise cap + 1.
  std::size_t count = 0;
};

/// Every color-preserving automorphism, in search order (identity first),
/// or a capped outcome once more than `cap` are found.
AutomorphismList enumerate_automorphisms(Graph const &g, std::size_t cap = kDefaultGroupCap);
AutomorphismList enumerate_automorphisms(Graph const &g, std::span<Color const> colors,
                                         std::size_t cap = kDefaultGroupCap);

struct AutomorphismGroup
{
  /// Strong generators along the search's first path, shallowest level first.
  GeneratorSet generators;
  GroupOrder order;
  /// Individualized vertices of the first path.
  std::vector<Vertex> base;
};

/// Generators and exact order of the color-preserving automorphism group,
/// counted as a product of orbit lengths along the first path.
AutomorphismGroup automorphism_group(Graph const &g, std::span<Color const> colors = {});

/// G with every edge {u, v} replaced by a path u - w - v; edge i of G
/// becomes vertex order() + i.
Graph subdivide(Graph const &g);

/// Automorphism of g acting nontrivially on E(g) that preserves every edge
/// label, restricted back to V(g). Searches the subdivision with original
/// vertices and edge vertices in separate color classes. Throws
/// std::invalid_argument if `labels` does not cover E(g).
SearchResult find_preserving_edges(Graph const &g, EdgeLabeling const &labels,
                                   bool exclude_identity = true);

} // namespace lexidis

#endif // LEXIDIS_AUTOSEARCH_HPP
