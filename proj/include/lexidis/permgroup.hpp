#ifndef LEXIDIS_PERMGROUP_HPP
#define LEXIDIS_PERMGROUP_HPP

#include <vector>

#include "lexidis/graph.hpp"
#include "lexidis/lexprod.hpp"
#include "lexidis/permutation.hpp"

namespace lexidis
{

/// Element of Aut(G)[Aut(H)]: (g, h) -> (alpha g, betas[alpha g] h).
struct WreathElement
{
  Permutation alpha;
  std::vector<Permutation> betas;

  /// The induced permutation of V(G[H]) under ProductIndexer numbering.
  Permutation to_product() const;
};

/// Generators of Aut(G)[Aut(H)] on nG * nH points: every alpha acting on
/// the copy index, then every beta acting inside copy g (identity
/// elsewhere) for g = 0..nG-1.
GeneratorSet wreath_generators(GeneratorSet const &autG, GeneratorSet const &autH,
                               Vertex nG, Vertex nH);

/// The extra automorphisms S(ij) of G[H]: for every unordered pair
/// {j1, j2} inside a class of relation_S(G) and every component C of
/// complement(H), swap (j1, h) <-> (j2, h) for all h outside C.
GeneratorSet sij_generators(Graph const &G, Graph const &H);

/// Sabidussi's condition for Aut(G[H]) = Aut(G)[Aut(H)]: H connected if
/// R(G) is not the diagonal, complement(H) connected if S(G) is not.
bool sabidussi_equal(Graph const &G, Graph const &H);

} // namespace lexidis

#endif // LEXIDIS_PERMGROUP_HPP
