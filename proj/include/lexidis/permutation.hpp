#ifndef LEXIDIS_PERMUTATION_HPP
#define LEXIDIS_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexidis/graph.hpp"

namespace lexidis
{

using GroupOrder = boost::multiprecision::cpp_int;

/// Bijection on 0..n-1, stored as its image array.
class Permutation
{
public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<Vertex> image);

  static Permutation identity(Vertex n);

  Vertex degree() const { return Vertex(image_.size()); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  std::span<Vertex const> image() const { return image_; }

  bool is_identity() const;

  /// Disjoint cycle notation, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Vertex> image, Unchecked)
  : image_(std::move(image))
  {}

  friend Permutation compose(Permutation const &, Permutation const &);
  friend Permutation inverse(Permutation const &);

  std::vector<Vertex> image_;
};

/// compose(p, q)(v) = p(q(v)). Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const &p, Permutation const &q);
Permutation inverse(Permutation const &p);
inline Permutation identity(Vertex n) { return Permutation::identity(n); }

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// Generators of a permutation group of the given degree.
struct GeneratorSet
{
  Vertex degree = 0;
  std::vector<Permutation> gens;

  /// Throws std::invalid_argument if some generator has another degree.
  void check() const;
};

struct ClosureResult
{
  /// Breadth-first order starting at the identity. Truncated at the cap
  /// when `complete` is false.
  std::vector<Permutation> elements;
  bool complete = true;

  /// Exact order when complete, otherwise a strict lower bound (cap + 1).
  std::size_t count = 0;
};

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// All elements of <gens>, enumerated by multiplying on the left by each
/// generator in list order. Stops with complete = false once more than
/// `cap` distinct elements have been seen.
ClosureResult closure(GeneratorSet const &gens, std::size_t cap = kDefaultGroupCap);

/// Exact order of <gens> from a deterministic Schreier-Sims stabilizer
/// chain. Used where the group is far too large to enumerate.
GroupOrder group_order(GeneratorSet const &gens);

/// True if p maps every edge of g onto an edge.
bool is_automorphism(Graph const &g, Permutation const &p);

} // namespace lexidis

#endif // LEXIDIS_PERMUTATION_HPP
