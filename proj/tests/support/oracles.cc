#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testing_support
{

namespace
{

std::vector<std::vector<bool>> matrix(Graph const &g)
{
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges())
    a[u][v] = a[v][u] = true;
  return a;
}

bool connected(Vertex n, std::vector<std::vector<bool>> const &a)
{
  if (n == 0)
    return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n; ++v)
      if (a[u][v] && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

// Edges as (u, v) pairs in the library's canonical order.
std::vector<std::pair<Vertex, Vertex>> pairs(Graph const &g)
{
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : g.edges())
    out.emplace_back(u, v);
  return out;
}

} // namespace

std::vector<Permutation> naive_automorphisms(Graph const &g, std::vector<std::uint64_t> const &colors)
{
  Vertex n = g.order();
  auto a = matrix(g);
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex(0));
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      if (!colors.empty() && colors[u] != colors[p[u]])
        ok = false;
      for (Vertex v = u + 1; v < n && ok; ++v)
        if (a[u][v] != a[p[u]][p[v]])
          ok = false;
    }
    if (ok)
      out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool naive_edge_symmetric(Graph const &g, std::vector<Label> const &edge_labels)
{
  auto es = pairs(g);
  std::map<std::pair<Vertex, Vertex>, Label> label;
  for (std::size_t i = 0; i < es.size(); ++i)
    label[es[i]] = edge_labels[i];
  for (auto const &p : naive_automorphisms(g)) {
    bool moves = false, keeps = true;
    for (auto [u, v] : es) {
      Vertex a = p(u), b = p(v);
      if (a > b)
        std::swap(a, b);
      if (std::pair(a, b) != std::pair(u, v))
        moves = true;
      if (label.at({a, b}) != label.at({u, v}))
        keeps = false;
    }
    if (moves && keeps)
      return true;
  }
  return false;
}

Label naive_dnum(Graph const &g)
{
  Vertex n = g.order();
  auto auts = naive_automorphisms(g);
  for (Label d = 1;; ++d) {
    std::vector<Label> l(n, 1);
    while (true) {
      bool fixed = true;
      for (auto const &p : auts) {
        if (p.is_identity())
          continue;
        bool keeps = true;
        for (Vertex v = 0; v < n && keeps; ++v)
          keeps = l[v] == l[p(v)];
        if (keeps) {
          fixed = false;
          break;
        }
      }
      if (fixed)
        return d;
      std::size_t i = n;
      while (i > 0 && l[i - 1] == d)
        l[--i] = 1;
      if (i == 0)
        break;
      ++l[i - 1];
    }
  }
}

Label naive_dindex(Graph const &g)
{
  std::size_t m = g.size();
  if (m == 0)
    throw std::invalid_argument("no edges");
  for (Label d = 1;; ++d) {
    std::vector<Label> l(m, 1);
    while (true) {
      if (!naive_edge_symmetric(g, l))
        return d;
      std::size_t i = m;
      while (i > 0 && l[i - 1] == d)
        l[--i] = 1;
      if (i == 0)
        break;
      ++l[i - 1];
    }
  }
}

std::vector<Graph> const &connected_graphs(Vertex n)
{
  static std::map<Vertex, std::vector<Graph>> cache;
  if (n > 6)
    throw std::invalid_argument("catalog stops at 6 vertices");
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;

  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      slots.emplace_back(u, v);
  std::vector<std::vector<std::size_t>> slot(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot[slots[i].first][slots[i].second] = i;
    slot[slots[i].second][slots[i].first] = i;
  }

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  std::vector<Vertex> perm(n);
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u)
        a[slots[i].first][slots[i].second] = a[slots[i].second][slots[i].first] = true;
    if (!connected(n, a))
      continue;
    std::uint32_t best = ~0u;
    std::iota(perm.begin(), perm.end(), Vertex(0));
    do {
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1u)
          img |= 1u << slot[perm[slots[i].first]][perm[slots[i].second]];
      best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second)
      continue;
    std::vector<lexidis::Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (best >> i & 1u)
        es.push_back({slots[i].first, slots[i].second});
    out.emplace_back(n, es);
  }
  return cache[n] = std::move(out);
}

Graph random_graph(Vertex n, double p, std::mt19937_64 &rng)
{
  std::bernoulli_distribution coin(p);
  std::vector<lexidis::Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        es.push_back({u, v});
  return Graph(n, es);
}

Graph random_connected(Vertex n, double p, std::mt19937_64 &rng)
{
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (connected(n, matrix(g)))
      return g;
  }
}

} // namespace testing_support
