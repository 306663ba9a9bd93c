#include <gtest/gtest.h>

#include <random>

#include "lexidis/permgroup.hpp"
#include "lexidis/permutation.hpp"
#include "oracles.hpp"

using namespace lexidis;

namespace
{

Permutation P(std::vector<Vertex> v) { return Permutation(std::move(v)); }

GroupOrder factorial(unsigned n)
{
  GroupOrder r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace

TEST(Permutation, Basics)
{
  auto p = P({1, 2, 0, 3});
  auto q = P({0, 1, 3, 2});
  EXPECT_EQ(compose(p, q)(2), p(q(2)));
  EXPECT_EQ(compose(p, inverse(p)), identity(4));
  EXPECT_EQ(p.cycles(), "(0 1 2)");
  EXPECT_EQ(compose(p, q).cycles(), "(0 1 2 3)");
  EXPECT_EQ(identity(3).cycles(), "()");
  EXPECT_TRUE(identity(5).is_identity());
  EXPECT_THROW(P({0, 0}), std::invalid_argument);
  EXPECT_THROW(P({0, 2}), std::invalid_argument);
  EXPECT_THROW(compose(identity(2), identity(3)), std::invalid_argument);
}

TEST(Permutation, ClosureOfSymmetricGroup)
{
  GeneratorSet s4{4, {P({1, 0, 2, 3}), P({1, 2, 3, 0})}};
  auto c = closure(s4);
  EXPECT_TRUE(c.complete);
  EXPECT_EQ(c.count, 24u);
  EXPECT_EQ(c.elements.front(), identity(4));
  EXPECT_EQ(group_order(s4), 24);

  auto capped = closure(s4, 10);
  EXPECT_FALSE(capped.complete);
  EXPECT_EQ(capped.count, 11u);
}

TEST(Permutation, TrivialGroup)
{
  GeneratorSet none{5, {}};
  EXPECT_EQ(closure(none).count, 1u);
  EXPECT_EQ(group_order(none), 1);
}

TEST(Permutation, SchreierSimsOnLargeSymmetricGroups)
{
  for (Vertex n : {8u, 12u, 20u}) {
    std::vector<Vertex> t(n), c(n);
    for (Vertex i = 0; i < n; ++i) {
      t[i] = i;
      c[i] = (i + 1) % n;
    }
    std::swap(t[0], t[1]);
    EXPECT_EQ(group_order(GeneratorSet{n, {P(t), P(c)}}), factorial(n));
  }
}

TEST(Permutation, SchreierSimsMatchesClosureOnRandomGenerators)
{
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    Vertex n = 2 + rng() % 7;
    GeneratorSet gs{n, {}};
    std::size_t k = 1 + rng() % 3;
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Vertex> img(n);
      for (Vertex v = 0; v < n; ++v)
        img[v] = v;
      // sparse random: a few transpositions
      std::size_t swaps = rng() % 3;
      for (std::size_t s = 0; s < swaps; ++s)
        std::swap(img[rng() % n], img[rng() % n]);
      gs.gens.push_back(P(img));
    }
    auto c = closure(gs);
    ASSERT_TRUE(c.complete);
    EXPECT_EQ(group_order(gs), GroupOrder(c.count));
  }
}

TEST(Permutation, IsAutomorphism)
{
  EXPECT_TRUE(is_automorphism(path(3), P({2, 1, 0})));
  EXPECT_FALSE(is_automorphism(path(3), P({1, 0, 2})));
}

TEST(Wreath, K2OfK2IsProperSubgroup)
{
  GeneratorSet swap2{2, {P({1, 0})}};
  auto w = wreath_generators(swap2, swap2, 2, 2);
  EXPECT_EQ(closure(w).count, 8u);
  EXPECT_EQ(testing_support::naive_automorphisms(lex_product(complete(2), complete(2))).size(), 24u);
  EXPECT_FALSE(sabidussi_equal(complete(2), complete(2)));
}

TEST(Wreath, ElementsActOnProduct)
{
  WreathElement e{P({1, 0, 2}), {P({1, 0}), identity(2), P({1, 0})}};
  Permutation p = e.to_product();
  // (0,0) -> (1, beta_1(0)) = (1,0) = 2
  EXPECT_EQ(p(0), 2u);
  // (1,0) -> (0, beta_0(0)) = (0,1) = 1
  EXPECT_EQ(p(2), 1u);
  // (2,0) -> (2, beta_2(0)) = (2,1) = 5
  EXPECT_EQ(p(4), 5u);
  Graph G = path(3), H = path(2);
  // alpha must be an automorphism of G for the product to be one
  WreathElement ok{P({2, 1, 0}), {P({1, 0}), identity(2), identity(2)}};
  EXPECT_TRUE(is_automorphism(lex_product(G, H), ok.to_product()));
}

TEST(Wreath, GeneratorsAreAutomorphisms)
{
  Graph G = path(3), H = cycle(4);
  GeneratorSet aG{3, {P({2, 1, 0})}};
  GeneratorSet aH{4, {P({1, 2, 3, 0}), P({0, 3, 2, 1})}};
  auto w = wreath_generators(aG, aH, 3, 4);
  EXPECT_EQ(w.gens.size(), 1u + 2u * 3u);
  for (auto const &g : w.gens)
    EXPECT_TRUE(is_automorphism(lex_product(G, H), g));
  EXPECT_EQ(closure(w).count, 2u * 8u * 8u * 8u);
  EXPECT_THROW(wreath_generators(aG, aH, 3, 5), std::invalid_argument);
}

TEST(Wreath, SijGenerators)
{
  // G = K_2 has one S-class; complement of K_2 has two components
  auto s = sij_generators(complete(2), complete(2));
  EXPECT_EQ(s.gens.size(), 2u);
  for (auto const &g : s.gens)
    EXPECT_TRUE(is_automorphism(complete(4), g));
  // complement of C_5 is connected: no extra generators
  EXPECT_TRUE(sij_generators(complete(2), cycle(5)).gens.empty());
}

TEST(Wreath, SabidussiCondition)
{
  EXPECT_TRUE(sabidussi_equal(path(3), path(3)));
  EXPECT_FALSE(sabidussi_equal(path(3), Graph(2)));      // R(P_3) nontrivial, H disconnected
  EXPECT_FALSE(sabidussi_equal(complete(3), path(3)));   // S(K_3) nontrivial, co-P_3 disconnected
  EXPECT_TRUE(sabidussi_equal(complete(3), cycle(5)));
  EXPECT_TRUE(sabidussi_equal(Graph(1), complete(3)));
}
