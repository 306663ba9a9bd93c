#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "lexidis/autosearch.hpp"
#include "lexidis/constructions.hpp"
#include "lexidis/distinguishing.hpp"
#include "lexidis/lexprod.hpp"
#include "lexidis/permgroup.hpp"
#include "oracles.hpp"

using namespace lexidis;

namespace
{

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

} // namespace

TEST(Formulas, YValues)
{
  for (Label dH = 1; dH <= 5; ++dH)
    EXPECT_EQ(y_value(0, dH), 1);
  EXPECT_EQ(y_value(1, 2), 2);
  EXPECT_EQ(y_value(2, 2), 3);
  EXPECT_EQ(y_value(3, 2), 4);
  EXPECT_EQ(y_value(2, 3), 6);
}

TEST(Formulas, MValues)
{
  EXPECT_EQ(m_value(8, 2), 3u);
  EXPECT_EQ(m_value(1, 2), 0u);
  EXPECT_EQ(m_value(4, 2), 2u);
  EXPECT_EQ(m_value(1, 7), 0u);
}

TEST(Formulas, PatternTiersMatchY)
{
  for (Label dH = 1; dH <= 5; ++dH)
    for (unsigned m = 0; m <= 4; ++m) {
      auto ps = replacement_patterns(m, dH);
      EXPECT_EQ(GroupOrder(ps.size()), y_value(m, dH)) << "dH=" << dH << " m=" << m;
      std::set<std::pair<std::vector<Label>, std::vector<Label>>> distinct;
      for (auto const &p : ps) {
        EXPECT_EQ(p.sources.size(), p.targets.size());
        if (m > 0)
          EXPECT_EQ(p.targets.back(), dH + m);
        for (Label t : p.targets)
          EXPECT_GT(t, dH);
        distinct.insert({p.sources, p.targets});
      }
      EXPECT_EQ(distinct.size(), ps.size());
    }
}

TEST(Formulas, SpiderClosedForm)
{
  EXPECT_EQ(spider_dnum_k2(50), 5u);
  EXPECT_EQ(spider_dnum_k2(3), 3u);
  EXPECT_EQ(spider_dnum_k2(9), 3u);
  EXPECT_EQ(spider_dnum_k2(10), 4u);
  for (std::uint64_t n = 3; n <= 1'000'000; ++n) {
    long double r = (1 + std::sqrt(1 + 8 * std::sqrt((long double)n))) / 2;
    auto closed = std::uint64_t(std::ceil(r - 1e-12L));
    ASSERT_EQ(spider_dnum_k2(n), closed) << n;
  }
  EXPECT_THROW(spider_dnum_k2(2), std::invalid_argument);
}

TEST(Formulas, BundleCapacity)
{
  EXPECT_EQ(t35_capacity(2), 2u);
  EXPECT_EQ(t35_capacity(3), 7u);
  EXPECT_EQ(t35_capacity(4), 19u);
  for (unsigned m = 2; m <= 6; ++m) {
    auto ts = t35_tuples(m);
    EXPECT_EQ(ts.size(), t35_capacity(m));
    EXPECT_EQ(t35_capacity(m), 2 * (m - 1) + m * binom(m - 1, 2) + binom(m - 1, 3));
    std::set<std::array<Label, 4>> distinct(ts.begin(), ts.end());
    EXPECT_EQ(distinct.size(), ts.size());
    for (auto const &t : ts)
      EXPECT_EQ(*std::max_element(t.begin(), t.end()), m);
  }
  EXPECT_EQ(t35_label_bound(2), 2u);
  EXPECT_EQ(t35_label_bound(9), 3u);
  EXPECT_EQ(t35_label_bound(28), 4u);
  EXPECT_EQ(t35_label_bound(29), 5u);
}

TEST(Formulas, EdgeBundle)
{
  auto b = edge_bundle(1, 3);
  EXPECT_EQ(b[0], (Edge{2, 6}));
  EXPECT_EQ(b[1], (Edge{2, 7}));
  EXPECT_EQ(b[2], (Edge{3, 6}));
  EXPECT_EQ(b[3], (Edge{3, 7}));
  EXPECT_THROW(edge_bundle(2, 2), std::invalid_argument);
}

TEST(Formulas, PowerBounds)
{
  EXPECT_EQ(power_dnum_bounds(path(3), 2), (std::pair<std::uint64_t, std::uint64_t>{2, 3}));
  EXPECT_EQ(power_dnum_bounds(path(3), 1), (std::pair<std::uint64_t, std::uint64_t>{2, 2}));
  Graph asym(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 2}});
  EXPECT_EQ(power_dnum_bounds(asym, 4), (std::pair<std::uint64_t, std::uint64_t>{1, 1}));
  EXPECT_EQ(distinguishing_number(lex_power(asym, 2)).value, 1u);
  EXPECT_THROW(power_dnum_bounds(complete(3), 2), std::invalid_argument);
}

TEST(VertexConstructions, ProductUpper)
{
  auto L = label_product_upper(complete(2), complete(3), VertexLabeling{{1, 2}},
                               VertexLabeling{{1, 2, 3}});
  EXPECT_EQ(L.distinct(), 6u);
  EXPECT_TRUE(is_distinguishing(complete(6), L));
  EXPECT_EQ(product_upper_bound(VertexLabeling{{1, 2}}, VertexLabeling{{1, 2, 3}}), 6u);

  VertexLabeling LH{{1, 1, 2}};
  EXPECT_EQ(label_product_upper(Graph(1), path(3), VertexLabeling{{1}}, LH), LH);
  auto single = label_product_upper(path(3), Graph(1), VertexLabeling{{1, 1, 2}}, VertexLabeling{{1}});
  EXPECT_EQ(single.labels, (std::vector<Label>{1, 2, 3}));
  EXPECT_THROW(label_product_upper(path(3), path(3), VertexLabeling{{1, 1, 1}}, LH),
               std::invalid_argument);
}

TEST(VertexConstructions, Replacement)
{
  auto L = label_thm22(spider(10), complete(2), spider_labeling(10), VertexLabeling{{1, 2}});
  EXPECT_LE(L.label_count(), 2u + m_value(4, 2));
  EXPECT_TRUE(is_distinguishing(lex_product(spider(10), complete(2)), L));

  Graph asym(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 2}});
  VertexLabeling LH{{1, 1, 2}};
  auto rep = label_thm22(asym, path(3), VertexLabeling{std::vector<Label>(6, 1)}, LH);
  for (Vertex g = 0; g < 6; ++g)
    for (Vertex h = 0; h < 3; ++h)
      EXPECT_EQ(rep.labels[g * 3 + h], LH.labels[h]);

  EXPECT_THROW(label_thm22(complete(3), path(3), VertexLabeling{{1, 2, 3}}, LH),
               std::invalid_argument);
}

TEST(VertexConstructions, ReplacementOnCatalogPairs)
{
  // every sabidussi pair with small factors certifies within D(H)+M labels
  using testing_support::connected_graphs;
  for (Vertex a = 2; a <= 4; ++a)
    for (Vertex b = 2; b <= 3; ++b)
      for (auto const &G : connected_graphs(a))
        for (auto const &H : connected_graphs(b)) {
          if (!sabidussi_equal(G, H))
            continue;
          auto LG = distinguishing_number(G).witness;
          auto LH = distinguishing_number(H).witness;
          auto L = label_thm22(G, H, LG, LH);
          EXPECT_TRUE(is_distinguishing(lex_product(G, H), L));
          EXPECT_LE(L.label_count(), LH.label_count() + m_value(LG.label_count(), LH.label_count()));
        }
}

TEST(VertexConstructions, SpiderLabeling)
{
  for (Vertex n = 3; n <= 30; ++n) {
    auto L = spider_labeling(n);
    EXPECT_EQ(L.label_count(), ceil_sqrt(n));
    EXPECT_TRUE(is_distinguishing(spider(n), L));
  }
}

TEST(EdgeConstructions, Inherit)
{
  EdgeLabeling LG{{1, 2}}, LH{{1, 2}};
  auto L = edge_label_thm31(path(3), path(3), LG, LH);
  EXPECT_EQ(L.label_count(), 2u);
  EXPECT_TRUE(is_distinguishing_edges(lex_product(path(3), path(3)), L));

  EdgeLabeling LC6{{1, 1, 2, 1, 2, 2}};
  ASSERT_TRUE(is_distinguishing_edges(cycle(6), LC6));
  auto L6 = edge_label_thm31(path(3), cycle(6), LG, LC6);
  EXPECT_TRUE(is_distinguishing_edges(lex_product(path(3), cycle(6)), L6));

  EXPECT_EQ(edge_label_thm31(Graph(1), path(3), EdgeLabeling{}, LH), LH);
  EXPECT_THROW(edge_label_thm31(path(3), complete(2), LG, EdgeLabeling{{1}}), std::invalid_argument);
}

TEST(EdgeConstructions, K2H)
{
  for (Graph H : {path(3), cycle(5), path(4), cycle(4)}) {
    auto r = edge_label_k2h(H);
    EXPECT_TRUE(r.from_scheme);
    EXPECT_EQ(r.labeling.label_count(), 2u);
    EXPECT_TRUE(is_distinguishing_edges(lex_product(complete(2), H), r.labeling));
  }
  // the scheme is preserved by a swap across the copies of K_6
  EXPECT_FALSE(is_distinguishing_edges(complete(6), edge_label_k2h_scheme(complete(3))));
  auto k3 = edge_label_k2h(complete(3));
  EXPECT_FALSE(k3.from_scheme);
  EXPECT_EQ(k3.labeling.label_count(), 2u);
  EXPECT_TRUE(is_distinguishing_edges(complete(6), k3.labeling));
  EXPECT_THROW(edge_label_k2h(complete(2)), std::invalid_argument);
}

TEST(EdgeConstructions, Star)
{
  auto L = edge_label_star(2, path(3), EdgeLabeling{{1, 2}});
  EXPECT_TRUE(is_distinguishing_edges(lex_product(star(2), path(3)), L));
  EXPECT_LE(L.label_count(), star_label_bound(2, 3, 2));

  for (Vertex n = 2; n <= 40; ++n) {
    auto Ln = edge_label_star(n, path(2), EdgeLabeling{{1}});
    EXPECT_TRUE(is_distinguishing_edges(lex_product(star(n), path(2)), Ln)) << n;
    EXPECT_EQ(Ln.label_count(), n <= 11 ? 2u : 3u) << n;
  }
  auto sig = star_signatures_p2(3);
  EXPECT_EQ(sig[0].column, (std::array<Label, 4>{1, 1, 1, 2}));
  EXPECT_EQ(star_label_bound(16, 2, 1), 3u);
  EXPECT_EQ(star_label_bound(15, 2, 1), 2u);
  EXPECT_THROW(edge_label_star(1, path(2), EdgeLabeling{{1}}), std::invalid_argument);
}

TEST(EdgeConstructions, StarMatrix)
{
  auto L = star_matrix(5, 3);
  EXPECT_EQ(L.d, 2u);
  ASSERT_EQ(L.columns.size(), 5u);
  EXPECT_EQ(L.columns[0], std::vector<Label>(9, 1));
  std::set<std::vector<Label>> distinct(L.columns.begin(), L.columns.end());
  EXPECT_EQ(distinct.size(), 5u);
  EXPECT_EQ(L.columns[1].back(), 2u);
}

TEST(EdgeConstructions, Path)
{
  std::vector<std::pair<Vertex, Graph>> cases{{3, path(3)}, {4, complete(2)}, {3, cycle(4)},
                                              {5, path(3)}, {3, Graph(1)}};
  for (auto const &[n, H] : cases) {
    auto L = edge_label_path(n, H);
    EXPECT_LE(L.label_count(), 2u);
    EXPECT_TRUE(is_distinguishing_edges(lex_product(path(n), H), L)) << n;
  }
  EXPECT_EQ(edge_label_path(4, Graph(1)).labels, (std::vector<Label>{1, 1, 2}));
  EXPECT_THROW(edge_label_path(2, path(3)), std::invalid_argument);
}

TEST(EdgeConstructions, Gp2)
{
  auto r = distinguishing_index(path(4));
  auto L = edge_label_gp2(path(4), r.witness);
  EXPECT_EQ(L.label_count(), 2u);
  EXPECT_TRUE(is_distinguishing_edges(lex_product(path(4), path(2)), L));
  EXPECT_THROW(edge_label_gp2(complete(3), EdgeLabeling{{1, 2, 3}}), std::invalid_argument);
}

TEST(EdgeConstructions, SmallG)
{
  EXPECT_TRUE(is_distinguishing_edges(lex_product(path(3), path(3)),
                                      edge_label_small_g(path(3), path(3))));
  EXPECT_TRUE(is_distinguishing_edges(lex_product(path(3), cycle(4)),
                                      edge_label_small_g(path(3), cycle(4))));
  EXPECT_THROW(edge_label_small_g(path(5), path(3)), std::invalid_argument);
  EXPECT_THROW(edge_label_small_g(path(2), path(3)), std::invalid_argument);
}

TEST(EdgeConstructions, Power)
{
  EXPECT_EQ(edge_label_power(path(3), 2), edge_label_small_g(path(3), path(3)));
  for (unsigned k : {2u, 3u}) {
    auto L = edge_label_power(path(3), k);
    EXPECT_EQ(L.distinct(), 2u);
    EXPECT_TRUE(is_distinguishing_edges(lex_power(path(3), k), L));
  }
  EXPECT_THROW(edge_label_power(path(3), 1), std::invalid_argument);
}
