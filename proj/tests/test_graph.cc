#include <gtest/gtest.h>

#include "lexidis/graph.hpp"

using namespace lexidis;

namespace
{

std::vector<Edge> E(std::initializer_list<Edge> es) { return es; }

} // namespace

TEST(Graph, ConstructionNormalizesAndSortsEdges)
{
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges(), E({{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_FALSE(g.adjacent(2, 3));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.edge_index(3, 1), 2u);
  EXPECT_FALSE(g.edge_index(2, 3).has_value());
}

TEST(Graph, RejectsMalformedEdges)
{
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, Neighborhoods)
{
  Graph p = path(4);
  EXPECT_EQ(neighbors(p, 1), (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(closed_neighbors(p, 1), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_THROW(neighbors(p, 4), std::out_of_range);
  EXPECT_THROW(closed_neighbors(p, 9), std::out_of_range);
}

TEST(Graph, Families)
{
  EXPECT_EQ(path(1).size(), 0u);
  EXPECT_EQ(path(4).edges(), E({{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_EQ(cycle(5).size(), 5u);
  EXPECT_EQ(complete(5).size(), 10u);
  EXPECT_EQ(star(3).edges(), E({{0, 1}, {0, 2}, {0, 3}}));
  Graph s = spider(3);
  EXPECT_EQ(s.order(), 7u);
  EXPECT_EQ(s.edges(), E({{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}}));
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(cycle(2), std::invalid_argument);
  EXPECT_THROW(spider(2), std::invalid_argument);
}

TEST(Graph, RelationsRAndS)
{
  // leaves of a star share their open neighborhood
  auto r = relation_R(star(3));
  EXPECT_EQ(r.classes, (std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}}));
  EXPECT_TRUE(relation_S(star(3)).is_discrete());

  // K_n: one S-class, R discrete
  EXPECT_EQ(relation_S(complete(4)).classes.size(), 1u);
  EXPECT_TRUE(relation_R(complete(4)).is_discrete());

  auto rp = relation_R(path(3));
  EXPECT_EQ(rp.classes, (std::vector<std::vector<Vertex>>{{0, 2}, {1}}));
  EXPECT_TRUE(relation_S(path(3)).is_discrete());
  EXPECT_EQ(relation_S(path(2)).classes.size(), 1u);
}

TEST(Graph, ComplementAndComponents)
{
  Graph c = complement(path(3));
  EXPECT_EQ(c.edges(), E({{0, 2}}));
  auto comps = components(c);
  EXPECT_EQ(comps, (std::vector<std::vector<Vertex>>{{0, 2}, {1}}));
  EXPECT_TRUE(is_connected(path(5)));
  EXPECT_FALSE(is_connected(c));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(complement(cycle(5))));
  EXPECT_FALSE(is_connected(complement(complete(3))));
}
