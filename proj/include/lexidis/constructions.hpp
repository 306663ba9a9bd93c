#ifndef LEXIDIS_CONSTRUCTIONS_HPP
#define LEXIDIS_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "lexidis/graph.hpp"
#include "lexidis/labeling.hpp"
#include "lexidis/permutation.hpp"

namespace lexidis
{

// Vertex labelings of G[H]

/// Copy i of H (i-th vertex of G) gets LH shifted by i * D(H), where D(H)
/// is the number of labels of LH. Uses |V(G)| * D(H) labels. Throws
/// std::invalid_argument unless LG and LH are distinguishing.
VertexLabeling label_product_upper(Graph const &G, Graph const &H,
                                   VertexLabeling const &LG, VertexLabeling const &LH);

/// D(G) * D(H), read off the label counts of LG and LH.
std::uint64_t product_upper_bound(VertexLabeling const &LG, VertexLabeling const &LH);

/// Replace source label i by target label i (ascending pairing).
struct ReplacementPattern
{
  std::vector<Label> sources;
  std::vector<Label> targets;
  unsigned tier = 0;
};

/// y_0 = 1, y_1 = dH, y_m = dH + sum_{i=1}^{m-1} C(m-1, i) C(dH, i+1).
GroupOrder y_value(unsigned m, Label dH);

/// Least M with y_0 + ... + y_M >= dG.
unsigned m_value(std::uint64_t dG, Label dH);

/// Patterns of tier m in canonical order: by size, then sources, then
/// targets. Tier m patterns all use target dH + m and otherwise targets in
/// dH+1 .. dH+m-1. Tier 0 is the single empty pattern.
std::vector<ReplacementPattern> replacement_patterns(unsigned m, Label dH);

/// The first `count` patterns over tiers 0, 1, 2, ...
std::vector<ReplacementPattern> first_patterns(std::size_t count, Label dH);

/// Copies of H in LG-class c (labels compressed to 1..D(G)) carry LH with
/// pattern c-1 applied. At most D(H) + m_value(D(G), D(H)) labels.
/// Requires sabidussi_equal(G, H) and distinguishing LG, LH.
VertexLabeling label_thm22(Graph const &G, Graph const &H,
                           VertexLabeling const &LG, VertexLabeling const &LH);

/// Center 1; branch j gets the j-th pair over 1..ceil(sqrt n) in lex order.
VertexLabeling spider_labeling(Vertex n);

/// Least r with C(r,2)^2 >= n.
std::uint64_t spider_dnum_k2(std::uint64_t n);

/// Least r with r^2 >= n.
std::uint64_t ceil_sqrt(std::uint64_t n);

/// (D(G), D(G)+k-1), or (1, 1) when D(G) = 1. Requires sabidussi_equal(G, G)
/// and k >= 1; D(G) comes from the exact search.
std::pair<std::uint64_t, std::uint64_t> power_dnum_bounds(Graph const &G, unsigned k);

// Edge labelings of G[H], indexed by lex_product(G, H).edges()

/// Copies carry LH, cross edges inherit the LG label of their G-edge.
/// Requires H != K_2 and sabidussi_equal(G, H).
EdgeLabeling edge_label_thm31(Graph const &G, Graph const &H,
                              EdgeLabeling const &LG, EdgeLabeling const &LH);

/// K_2[H]: first copy 1, second copy 2, and (x_1,y_j) sends label 2 to
/// (x_2,y_q) exactly for q < j. Requires H connected with at least 3
/// vertices. Not distinguishing for every H (K_3 is a counterexample).
EdgeLabeling edge_label_k2h_scheme(Graph const &H);

struct K2HLabeling
{
  EdgeLabeling labeling;
  /// False when the scheme was not distinguishing and the labeling is the
  /// least 2-labeling found by distinguishing_index instead.
  bool from_scheme = true;
};

/// A distinguishing 2-labeling of K_2[H]: the scheme above when it
/// certifies, otherwise the exact search's witness.
K2HLabeling edge_label_k2h(Graph const &H);

/// Columns of the cross-edge matrix between the center copy and pendant
/// copy j; entry a * m + b labels (center, y_a) - (pendant j, y_b).
struct LMatrix
{
  unsigned m = 0;
  Label d = 0;
  std::vector<std::vector<Label>> columns;
};

/// The matrix used by edge_label_star for m >= 3: the first n sequences
/// of length m^2 over 1..d in lex order, d least with d^(m^2) >= n.
LMatrix star_matrix(Vertex n, unsigned m);

/// Pendant copy data for m = 2: cross-edge column and the label of the
/// copy's own edge.
struct StarSignature
{
  std::array<Label, 4> column;
  Label inner = 1;
};

/// Signatures for K_{1,n}[P_2] over the least sufficient label count.
/// Columns fixed by swapping the pendant pair are skipped, one column per
/// swap orbit is kept, and the first signature's image under the center
/// swap is withheld.
std::vector<StarSignature> star_signatures_p2(Vertex n);

/// K_{1,n}[H]. Requires n >= 2, H connected on m >= 2 vertices, LH
/// distinguishing.
EdgeLabeling edge_label_star(Vertex n, Graph const &H, EdgeLabeling const &LH);

/// max{D'(H), ceil(n^(1/m^2))}, plus one when m = 2 and n is a fourth power.
std::uint64_t star_label_bound(Vertex n, unsigned m, Label dH_index);

/// P_n[H] with two labels. Requires n >= 3 and H connected.
EdgeLabeling edge_label_path(Vertex n, Graph const &H);

/// 2 C(m-1,1) + m C(m-1,2) + C(m-1,3).
std::uint64_t t35_capacity(unsigned m);

/// Tier-m 4-tuples in canonical order.
std::vector<std::array<Label, 4>> t35_tuples(unsigned m);

/// Least k with t35_capacity(2) + ... + t35_capacity(k) >= dprime.
unsigned t35_label_bound(std::uint64_t dprime);

/// The four edges between copies i < j of P_2 in G[P_2]:
/// (i,0)(j,0), (i,0)(j,1), (i,1)(j,0), (i,1)(j,1).
std::array<Edge, 4> edge_bundle(Vertex i, Vertex j);

/// G[P_2]: copy edges 1, the bundle of a G-edge of class c carries tuple
/// c-1. Requires sabidussi_equal(G, P_2) and LG distinguishing.
EdgeLabeling edge_label_gp2(Graph const &G, EdgeLabeling const &LG);

/// G[H] with two labels when |V(G)| <= |E(H)| + 1. Requires both connected
/// and sabidussi_equal(G, H).
EdgeLabeling edge_label_small_g(Graph const &G, Graph const &H);

/// G^k = G[G^(k-1)] with two labels, k >= 2.
EdgeLabeling edge_label_power(Graph const &G, unsigned k);

} // namespace lexidis

#endif // LEXIDIS_CONSTRUCTIONS_HPP
