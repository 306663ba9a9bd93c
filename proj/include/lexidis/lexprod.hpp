#ifndef LEXIDIS_LEXPROD_HPP
#define LEXIDIS_LEXPROD_HPP

#include <utility>

#include "lexidis/graph.hpp"

namespace lexidis
{

/// Bijection (g, h) <-> g * nH + h between V(G) x V(H) and the vertices of
/// G[H]. All product labelings and certificates use this indexing.
class ProductIndexer
{
public:
  /// Throws std::overflow_error if nG * nH does not fit in Vertex.
  ProductIndexer(Vertex nG, Vertex nH);

  Vertex outer_order() const { return nG_; }
  Vertex inner_order() const { return nH_; }
  Vertex order() const { return nG_ * nH_; }

  Vertex encode(Vertex g, Vertex h) const { return g * nH_ + h; }
  std::pair<Vertex, Vertex> decode(Vertex v) const { return {v / nH_, v % nH_}; }

private:
  Vertex nG_;
  Vertex nH_;
};

/// (a,x) ~ (b,y) iff ab in E(G), or a = b and xy in E(H).
Graph lex_product(Graph const &G, Graph const &H);

/// G^1 = G, G^k = G[G^(k-1)].
Graph lex_power(Graph const &G, unsigned k);

/// deg_H(h) + |V(H)| deg_G(g).
std::size_t product_degree(Graph const &G, Graph const &H, Vertex g, Vertex h);

} // namespace lexidis

#endif // LEXIDIS_LEXPROD_HPP
