#include "lexidis/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lexidis
{

Graph::Graph(Vertex n)
: n_(n),
  words_((std::size_t(n) + 63) / 64),
  adj_(n),
  bits_(std::size_t(n) * words_, 0)
{}

Graph::Graph(Vertex n, std::span<Edge const> edges)
: Graph(n)
{
  edges_.reserve(edges.size());
  for (auto e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge {" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + "} has an endpoint >= " +
                                  std::to_string(n));
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v)
      std::swap(e.u, e.v);
    edges_.push_back(e);
  }

  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end())
    throw std::invalid_argument("duplicate edge {" + std::to_string(dup->u) +
                                ", " + std::to_string(dup->v) + "}");

  for (auto const &e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    bits_[e.u * words_ + (e.v >> 6)] |= std::uint64_t(1) << (e.v & 63u);
    bits_[e.v * words_ + (e.u >> 6)] |= std::uint64_t(1) << (e.u & 63u);
  }
  for (auto &a : adj_)
    std::sort(a.begin(), a.end());
}

std::optional<std::size_t> Graph::edge_index(Vertex u, Vertex v) const
{
  if (u > v)
    std::swap(u, v);
  Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    return std::nullopt;
  return std::size_t(it - edges_.begin());
}

bool VertexPartition::is_discrete() const
{
  return std::all_of(classes.begin(), classes.end(),
                     [](auto const &c) { return c.size() == 1; });
}

namespace
{

void check_vertex(Graph const &g, Vertex v)
{
  if (v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(g.order()));
}

template <typename Key>
VertexPartition partition_by(Graph const &g, Key key)
{
  std::map<std::vector<Vertex>, std::vector<Vertex>> buckets;
  for (Vertex v = 0; v < g.order(); ++v)
    buckets[key(v)].push_back(v);

  VertexPartition p;
  for (auto &[k, cls] : buckets)
    p.classes.push_back(std::move(cls));
  std::sort(p.classes.begin(), p.classes.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });
  return p;
}

} // namespace

std::vector<Vertex> neighbors(Graph const &g, Vertex v)
{
  check_vertex(g, v);
  auto adj = g.adjacency(v);
  return {adj.begin(), adj.end()};
}

std::vector<Vertex> closed_neighbors(Graph const &g, Vertex v)
{
  auto nb = neighbors(g, v);
  nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
  return nb;
}

VertexPartition relation_R(Graph const &g)
{
  return partition_by(g, [&](Vertex v) { return neighbors(g, v); });
}

VertexPartition relation_S(Graph const &g)
{
  return partition_by(g, [&](Vertex v) { return closed_neighbors(g, v); });
}

Graph complement(Graph const &g)
{
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        edges.push_back({u, v});
  return Graph(g.order(), edges);
}

std::vector<std::vector<Vertex>> components(Graph const &g)
{
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.adjacency(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(Graph const &g)
{
  return g.order() <= 1 || components(g).size() == 1;
}

namespace
{

void require(bool ok, char const *family, Vertex n, Vertex min)
{
  if (!ok)
    throw std::invalid_argument(std::string(family) + "(" + std::to_string(n) +
                                ") needs n >= " + std::to_string(min));
}

} // namespace

Graph path(Vertex n)
{
  require(n >= 1, "path", n, 1);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle(Vertex n)
{
  require(n >= 3, "cycle", n, 3);
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph complete(Vertex n)
{
  require(n >= 1, "complete", n, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph(n, edges);
}

Graph star(Vertex n)
{
  require(n >= 1, "star", n, 1);
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= n; ++leaf)
    edges.push_back({0, leaf});
  return Graph(n + 1, edges);
}

Graph spider(Vertex n)
{
  require(n >= 3, "spider", n, 3);
  std::vector<Edge> edges;
  for (Vertex j = 1; j <= n; ++j) {
    edges.push_back({0, 2 * j - 1});
    edges.push_back({2 * j - 1, 2 * j});
  }
  return Graph(2 * n + 1, edges);
}

} // namespace lexidis
