#include "lexidis/lexprod.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace lexidis
{

ProductIndexer::ProductIndexer(Vertex nG, Vertex nH)
: nG_(nG),
  nH_(nH)
{
  if (nH != 0 && nG > std::numeric_limits<Vertex>::max() / nH)
    throw std::overflow_error("product order " + std::to_string(nG) + " * " +
                              std::to_string(nH) + " exceeds the vertex index type");
}

Graph lex_product(Graph const &G, Graph const &H)
{
  ProductIndexer idx(G.order(), H.order());
  Vertex nH = H.order();

  std::vector<Edge> edges;
  edges.reserve(G.order() * H.size() + G.size() * std::size_t(nH) * nH);
  for (Vertex g = 0; g < G.order(); ++g)
    for (auto const &e : H.edges())
      edges.push_back({idx.encode(g, e.u), idx.encode(g, e.v)});
  for (auto const &e : G.edges())
    for (Vertex x = 0; x < nH; ++x)
      for (Vertex y = 0; y < nH; ++y)
        edges.push_back({idx.encode(e.u, x), idx.encode(e.v, y)});
  return Graph(idx.order(), edges);
}

Graph lex_power(Graph const &G, unsigned k)
{
  if (k == 0)
    throw std::invalid_argument("lex_power needs k >= 1");
  Graph power = G;
  for (unsigned i = 1; i < k; ++i)
    power = lex_product(G, power);
  return power;
}

std::size_t product_degree(Graph const &G, Graph const &H, Vertex g, Vertex h)
{
  if (g >= G.order() || h >= H.order())
    throw std::out_of_range("product vertex (" + std::to_string(g) + ", " +
                            std::to_string(h) + ") out of range");
  return H.degree(h) + std::size_t(H.order()) * G.degree(g);
}

} // namespace lexidis
