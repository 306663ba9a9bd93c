#include "lexidis/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lexidis/autosearch.hpp"
#include "lexidis/distinguishing.hpp"
#include "lexidis/lexprod.hpp"
#include "lexidis/permgroup.hpp"

namespace lexidis
{

namespace
{

void require(bool ok, char const *what)
{
  if (!ok)
    throw std::invalid_argument(what);
}

GroupOrder binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  GroupOrder r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

// k-subsets of lo..hi in lex order.
std::vector<std::vector<Label>> subsets(Label lo, Label hi, std::size_t k)
{
  std::vector<std::vector<Label>> out;
  if (hi < lo) {
    if (k == 0)
      out.emplace_back();
    return out;
  }
  std::size_t n = hi - lo + 1;
  if (k > n)
    return out;
  std::vector<Label> cur(k);
  for (std::size_t i = 0; i < k; ++i)
    cur[i] = lo + Label(i);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == hi - Label(k - i))
      --i;
    if (i == 0)
      break;
    ++cur[i - 1];
    for (std::size_t t = i; t < k; ++t)
      cur[t] = cur[t - 1] + 1;
  }
  return out;
}

template <class F>
EdgeLabeling label_product_edges(Graph const &P, ProductIndexer const &idx, F &&f)
{
  EdgeLabeling out;
  out.labels.reserve(P.size());
  for (auto [u, v] : P.edges()) {
    auto [a, x] = idx.decode(u);
    auto [b, y] = idx.decode(v);
    out.labels.push_back(f(a, x, b, y));
  }
  return out;
}

void require_distinguishing(Graph const &g, VertexLabeling const &l, char const *what)
{
  validate(g, l);
  require(is_distinguishing(g, l), what);
}

void require_distinguishing(Graph const &g, EdgeLabeling const &l, char const *what)
{
  validate(g, l);
  require(is_distinguishing_edges(g, l), what);
}

} // namespace

VertexLabeling label_product_upper(Graph const &G, Graph const &H,
                                   VertexLabeling const &LG, VertexLabeling const &LH)
{
  require_distinguishing(G, LG, "LG is not distinguishing");
  require_distinguishing(H, LH, "LH is not distinguishing");
  auto lh = compress(LH);
  Label dH = lh.label_count();
  ProductIndexer idx(G.order(), H.order());
  VertexLabeling out{std::vector<Label>(idx.order())};
  for (Vertex g = 0; g < G.order(); ++g)
    for (Vertex h = 0; h < H.order(); ++h)
      out.labels[idx.encode(g, h)] = lh.labels[h] + g * dH;
  return out;
}

std::uint64_t product_upper_bound(VertexLabeling const &LG, VertexLabeling const &LH)
{
  return std::uint64_t(LG.distinct()) * LH.distinct();
}

GroupOrder y_value(unsigned m, Label dH)
{
  if (m == 0)
    return 1;
  GroupOrder y = dH;
  for (unsigned i = 1; i + 1 <= m; ++i)
    y += binomial(m - 1, i) * binomial(dH, i + 1);
  return y;
}

unsigned m_value(std::uint64_t dG, Label dH)
{
  require(dH >= 1, "D(H) must be positive");
  GroupOrder sum = 0;
  for (unsigned k = 0;; ++k) {
    sum += y_value(k, dH);
    if (sum >= dG)
      return k;
  }
}

std::vector<ReplacementPattern> replacement_patterns(unsigned m, Label dH)
{
  std::vector<ReplacementPattern> out;
  if (m == 0) {
    out.push_back({});
    return out;
  }
  for (std::size_t s = 1; s <= std::min<std::size_t>(dH, m); ++s) {
    auto others = subsets(dH + 1, dH + m - 1, s - 1);
    for (auto const &src : subsets(1, dH, s)) {
      for (auto tgt : others) {
        tgt.push_back(dH + m);
        out.push_back({src, std::move(tgt), m});
      }
    }
  }
  return out;
}

std::vector<ReplacementPattern> first_patterns(std::size_t count, Label dH)
{
  std::vector<ReplacementPattern> out;
  for (unsigned m = 0; out.size() < count; ++m)
    for (auto &p : replacement_patterns(m, dH))
      if (out.size() < count)
        out.push_back(std::move(p));
  return out;
}

VertexLabeling label_thm22(Graph const &G, Graph const &H,
                           VertexLabeling const &LG, VertexLabeling const &LH)
{
  require(sabidussi_equal(G, H), "Aut(G[H]) is not the wreath product");
  require_distinguishing(G, LG, "LG is not distinguishing");
  require_distinguishing(H, LH, "LH is not distinguishing");

  auto lg = compress(LG);
  auto lh = compress(LH);
  Label dH = lh.label_count();
  auto patterns = first_patterns(lg.label_count(), dH);

  ProductIndexer idx(G.order(), H.order());
  VertexLabeling out{std::vector<Label>(idx.order())};
  for (Vertex g = 0; g < G.order(); ++g) {
    auto const &p = patterns[lg.labels[g] - 1];
    std::vector<Label> map(dH + 1);
    for (Label l = 1; l <= dH; ++l)
      map[l] = l;
    for (std::size_t i = 0; i < p.sources.size(); ++i)
      map[p.sources[i]] = p.targets[i];
    for (Vertex h = 0; h < H.order(); ++h)
      out.labels[idx.encode(g, h)] = map[lh.labels[h]];
  }
  return out;
}

std::uint64_t ceil_sqrt(std::uint64_t n)
{
  std::uint64_t r = 0;
  while (r * r < n)
    ++r;
  return r;
}

VertexLabeling spider_labeling(Vertex n)
{
  Graph g = spider(n);
  auto r = Label(ceil_sqrt(n));
  VertexLabeling out{std::vector<Label>(g.order(), 1)};
  for (Vertex j = 0; j < n; ++j) {
    out.labels[2 * j + 1] = j / r + 1;
    out.labels[2 * j + 2] = j % r + 1;
  }
  return out;
}

std::uint64_t spider_dnum_k2(std::uint64_t n)
{
  require(n >= 3, "spider needs n >= 3");
  for (std::uint64_t r = 2;; ++r) {
    std::uint64_t c = r * (r - 1) / 2;
    if (c * c >= n)
      return r;
  }
}

std::pair<std::uint64_t, std::uint64_t> power_dnum_bounds(Graph const &G, unsigned k)
{
  require(k >= 1, "power needs k >= 1");
  require(sabidussi_equal(G, G), "Aut(G[G]) is not the wreath product");
  std::uint64_t d = *distinguishing_number(G).value;
  if (d == 1)
    return {1, 1};
  return {d, d + k - 1};
}

EdgeLabeling edge_label_thm31(Graph const &G, Graph const &H,
                              EdgeLabeling const &LG, EdgeLabeling const &LH)
{
  require(!(H.order() == 2 && H.size() == 1), "H must not be K_2");
  require(sabidussi_equal(G, H), "Aut(G[H]) is not the wreath product");
  validate(G, LG);
  validate(H, LH);

  Graph P = lex_product(G, H);
  ProductIndexer idx(G.order(), H.order());
  return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) {
    if (a == b)
      return LH.at(H, x, y);
    return LG.at(G, a, b);
  });
}

EdgeLabeling edge_label_k2h_scheme(Graph const &H)
{
  require(H.order() >= 3, "H needs at least 3 vertices");
  require(is_connected(H), "H must be connected");
  Graph P = lex_product(complete(2), H);
  ProductIndexer idx(2, H.order());
  return label_product_edges(P, idx, [](Vertex a, Vertex x, Vertex b, Vertex y) -> Label {
    if (a == b)
      return a == 0 ? 1 : 2;
    return y < x ? 2 : 1;
  });
}

K2HLabeling edge_label_k2h(Graph const &H)
{
  auto scheme = edge_label_k2h_scheme(H);
  Graph P = lex_product(complete(2), H);
  if (is_distinguishing_edges(P, scheme))
    return {std::move(scheme), true};
  auto r = distinguishing_index(P, 2);
  if (!r.value)
    throw std::runtime_error("no distinguishing 2-labeling of K_2[H]");
  return {std::move(r.witness), false};
}

LMatrix star_matrix(Vertex n, unsigned m)
{
  require(m >= 1, "m must be positive");
  std::size_t rows = std::size_t(m) * m;
  LMatrix L{m, 1, {}};
  // least d with d^rows >= n
  auto reaches = [&](std::uint64_t d) {
    std::uint64_t p = 1;
    for (std::size_t i = 0; i < rows && p < n; ++i)
      p *= d;
    return p >= n;
  };
  while (!reaches(L.d))
    ++L.d;
  L.columns.reserve(n);
  for (Vertex j = 0; j < n; ++j) {
    std::vector<Label> col(rows);
    std::uint64_t rest = j;
    for (std::size_t r = rows; r-- > 0;) {
      col[r] = Label(rest % L.d) + 1;
      rest /= L.d;
    }
    L.columns.push_back(std::move(col));
  }
  return L;
}

std::vector<StarSignature> star_signatures_p2(Vertex n)
{
  auto swap_pendant = [](std::array<Label, 4> c) {
    return std::array<Label, 4>{c[1], c[0], c[3], c[2]};
  };
  auto swap_center = [](std::array<Label, 4> c) {
    return std::array<Label, 4>{c[2], c[3], c[0], c[1]};
  };

  for (Label d = 2;; ++d) {
    std::vector<StarSignature> out;
    std::array<Label, 4> withheld{};
    for (Label inner = 1; inner <= d && out.size() < n; ++inner) {
      std::array<Label, 4> c{1, 1, 1, 1};
      while (out.size() < n) {
        auto b = swap_pendant(c);
        bool keep = b != c && c < b && !(inner == 1 && c == withheld);
        if (keep) {
          out.push_back({c, inner});
          if (out.size() == 1) {
            auto a = swap_center(c);
            withheld = std::min(a, swap_pendant(a));
          }
        }
        std::size_t i = 4;
        while (i > 0 && c[i - 1] == d)
          c[--i] = 1;
        if (i == 0)
          break;
        ++c[i - 1];
      }
    }
    if (out.size() == n)
      return out;
  }
}

EdgeLabeling edge_label_star(Vertex n, Graph const &H, EdgeLabeling const &LH)
{
  require(n >= 2, "star needs n >= 2");
  require(H.order() >= 2, "H needs at least 2 vertices");
  require(is_connected(H), "H must be connected");
  Graph S = star(n);
  require(sabidussi_equal(S, H), "Aut(K_{1,n}[H]) is not the wreath product");
  unsigned m = H.order();
  Graph P = lex_product(S, H);
  ProductIndexer idx(n + 1, m);

  if (m == 2) {
    auto sig = star_signatures_p2(n);
    return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) {
      if (a == b)
        return a == 0 ? Label(1) : sig[a - 1].inner;
      return sig[b - 1].column[x * 2 + y];
    });
  }

  require_distinguishing(H, LH, "LH is not distinguishing");
  auto L = star_matrix(n, m);
  return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) {
    if (a == b)
      return LH.at(H, x, y);
    return L.columns[b - 1][x * m + y];
  });
}

std::uint64_t star_label_bound(Vertex n, unsigned m, Label dH_index)
{
  require(m >= 2, "m must be at least 2");
  auto d = std::uint64_t(star_matrix(n, m).d);
  std::uint64_t bound = std::max<std::uint64_t>(dH_index, d);
  if (m == 2) {
    std::uint64_t p = d * d * d * d;
    if (p == n)
      ++bound;
  }
  return bound;
}

EdgeLabeling edge_label_path(Vertex n, Graph const &H)
{
  require(n >= 3, "path needs n >= 3");
  require(is_connected(H), "H must be connected");
  Graph P = lex_product(path(n), H);
  ProductIndexer idx(n, H.order());
  return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) -> Label {
    if (a == b)
      return 1;
    if (a + 2 < n)
      return y < x ? 2 : 1;
    return y < x ? 1 : 2;
  });
}

std::uint64_t t35_capacity(unsigned m)
{
  require(m >= 2, "capacity needs m >= 2");
  std::uint64_t k = m - 1;
  return 2 * k + m * (k * (k - 1) / 2) + k * (k - 1) * (k - 2) / 6;
}

std::vector<std::array<Label, 4>> t35_tuples(unsigned m)
{
  require(m >= 2, "tuples need m >= 2");
  std::vector<std::array<Label, 4>> out;
  for (Label a = 1; a < m; ++a) {
    out.push_back({a, a, a, m});
    out.push_back({a, m, m, m});
  }
  for (Label a = 1; a < m; ++a)
    for (Label b = a + 1; b < m; ++b)
      for (Label x = 1; x <= m; ++x)
        out.push_back({a, b, m, x});
  for (Label a = 1; a < m; ++a)
    for (Label b = a + 1; b < m; ++b)
      for (Label c = b + 1; c < m; ++c)
        out.push_back({a, b, c, m});
  return out;
}

unsigned t35_label_bound(std::uint64_t dprime)
{
  std::uint64_t sum = 0;
  for (unsigned k = 2;; ++k) {
    sum += t35_capacity(k);
    if (sum >= dprime)
      return k;
  }
}

std::array<Edge, 4> edge_bundle(Vertex i, Vertex j)
{
  require(i < j, "bundle needs i < j");
  return {Edge{2 * i, 2 * j}, Edge{2 * i, 2 * j + 1}, Edge{2 * i + 1, 2 * j},
          Edge{2 * i + 1, 2 * j + 1}};
}

EdgeLabeling edge_label_gp2(Graph const &G, EdgeLabeling const &LG)
{
  Graph P2 = path(2);
  require(sabidussi_equal(G, P2), "Aut(G[P_2]) is not the wreath product");
  require_distinguishing(G, LG, "LG is not distinguishing");
  auto lg = compress(LG);

  std::vector<std::array<Label, 4>> tuples;
  for (unsigned m = 2; tuples.size() < lg.label_count(); ++m)
    for (auto const &t : t35_tuples(m))
      tuples.push_back(t);

  Graph P = lex_product(G, P2);
  ProductIndexer idx(G.order(), 2);
  return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) -> Label {
    if (a == b)
      return 1;
    return tuples[lg.at(G, a, b) - 1][x * 2 + y];
  });
}

EdgeLabeling edge_label_small_g(Graph const &G, Graph const &H)
{
  require(is_connected(G) && is_connected(H), "G and H must be connected");
  require(G.order() <= H.size() + 1, "needs |V(G)| <= |E(H)| + 1");
  require(sabidussi_equal(G, H), "Aut(G[H]) is not the wreath product");

  Graph P = lex_product(G, H);
  ProductIndexer idx(G.order(), H.order());
  return label_product_edges(P, idx, [&](Vertex a, Vertex x, Vertex b, Vertex y) -> Label {
    if (a == b)
      return *H.edge_index(x, y) < a ? 1 : 2;
    return y < x ? 2 : 1;
  });
}

EdgeLabeling edge_label_power(Graph const &G, unsigned k)
{
  require(k >= 2, "power needs k >= 2");
  require(sabidussi_equal(G, G), "Aut(G[G]) is not the wreath product");
  return edge_label_small_g(G, lex_power(G, k - 1));
}

} // namespace lexidis
