#ifndef LEXIDIS_DISTINGUISHING_HPP
#define LEXIDIS_DISTINGUISHING_HPP

#include <cstdint>
#include <optional>

#include "lexidis/graph.hpp"
#include "lexidis/labeling.hpp"

namespace lexidis
{

/// True iff no non-identity automorphism of g preserves every vertex label.
bool is_distinguishing(Graph const &g, VertexLabeling const &l);

/// True iff no automorphism acting nontrivially on E(g) preserves every
/// edge label. (K_2 is therefore distinguished by one label: its swap
/// fixes the only edge.)
bool is_distinguishing_edges(Graph const &g, EdgeLabeling const &l);

struct NumberResult
{
  /// Least d <= d_max admitting a distinguishing labeling; empty if none.
  std::optional<Label> value;
  /// Lexicographically least distinguishing restricted-growth labeling
  /// with `value` labels.
  VertexLabeling witness;
  /// Partial labelings examined over all d.
  std::uint64_t nodes = 0;
};

struct IndexResult
{
  std::optional<Label> value;
  EdgeLabeling witness;
  std::uint64_t nodes = 0;
};

/// Distinguishing number D(g) by exhaustive search over restricted-growth
/// labelings for d = 1, 2, ..., d_max (default: the vertex count).
///
/// A partial labeling of vertices 0..k-1 is cut as soon as some nontrivial
/// automorphism fixes every unlabeled vertex and preserves the labels so
/// far; every extension is then preserved too. The cut is exact, so the
/// returned value is minimal.
NumberResult distinguishing_number(Graph const &g, std::optional<Label> d_max = std::nullopt);

/// Distinguishing index D'(g), same scheme over edges in canonical order.
/// Requires at least one edge; d_max defaults to the edge count.
IndexResult distinguishing_index(Graph const &g, std::optional<Label> d_max = std::nullopt);

} // namespace lexidis

#endif // LEXIDIS_DISTINGUISHING_HPP
