#include "lexidis/permutation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

namespace lexidis
{

Permutation::Permutation(std::vector<Vertex> image)
: image_(std::move(image))
{
  std::vector<bool> hit(image_.size(), false);
  for (Vertex x : image_) {
    if (x >= image_.size() || hit[x])
      throw std::invalid_argument("image array is not a bijection");
    hit[x] = true;
  }
}

Permutation Permutation::identity(Vertex n)
{
  std::vector<Vertex> image(n);
  for (Vertex v = 0; v < n; ++v)
    image[v] = v;
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const
{
  for (Vertex v = 0; v < degree(); ++v)
    if (image_[v] != v)
      return false;
  return true;
}

std::string Permutation::cycles() const
{
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (Vertex start = 0; start < degree(); ++start) {
    if (seen[start] || image_[start] == start)
      continue;
    out += '(';
    Vertex v = start;
    do {
      seen[v] = true;
      if (v != start)
        out += ' ';
      out += std::to_string(v);
      v = image_[v];
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("cannot compose permutations of degree " +
                                std::to_string(p.degree()) + " and " +
                                std::to_string(q.degree()));
  std::vector<Vertex> image(p.degree());
  for (Vertex v = 0; v < p.degree(); ++v)
    image[v] = p.image_[q.image_[v]];
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation inverse(Permutation const &p)
{
  std::vector<Vertex> image(p.degree());
  for (Vertex v = 0; v < p.degree(); ++v)
    image[p.image_[v]] = v;
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  // FNV-1a over the image words.
  std::size_t h = 1469598103934665603ull;
  for (Vertex x : p.image()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

void GeneratorSet::check() const
{
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator of degree " + std::to_string(g.degree()) +
                                  " in a set of degree " + std::to_string(degree));
}

ClosureResult closure(GeneratorSet const &gens, std::size_t cap)
{
  if (cap == 0)
    throw std::invalid_argument("closure cap must be positive");
  gens.check();

  ClosureResult result;
  std::unordered_set<Permutation, PermutationHash> seen;
  auto id = Permutation::identity(gens.degree);
  seen.insert(id);
  result.elements.push_back(id);

  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (auto const &g : gens.gens) {
      auto next = compose(g, result.elements[head]);
      if (seen.contains(next))
        continue;
      if (result.elements.size() == cap) {
        result.complete = false;
        result.count = cap + 1;
        return result;
      }
      seen.insert(next);
      result.elements.push_back(std::move(next));
    }
  }
  result.count = result.elements.size();
  return result;
}

namespace
{

// Stabilizer chain with explicit transversals. Level i stabilizes
// base[0..i-1] and holds the orbit of base[i] with coset representatives.
class StabilizerChain
{
public:
  explicit StabilizerChain(Vertex degree)
  : degree_(degree)
  {}

  void build(std::vector<Permutation> const &input)
  {
    for (auto const &g : input) {
      if (g.is_identity())
        continue;
      if (fixes_base(g))
        base_.push_back(first_moved(g));
      strong_.push_back(g);
    }
    levels_.resize(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i)
      rebuild_orbit(i);

    std::size_t i = base_.size();
    while (i-- > 0) {
      if (auto restart = check_level(i))
        i = *restart + 1;
    }
  }

  GroupOrder order() const
  {
    GroupOrder o = 1;
    for (auto const &lvl : levels_)
      o *= lvl.points.size();
    return o;
  }

private:
  struct Level
  {
    std::vector<Vertex> points;
    std::vector<std::optional<Permutation>> rep;
  };

  bool fixes_base(Permutation const &g) const
  {
    return std::all_of(base_.begin(), base_.end(), [&](Vertex b) { return g(b) == b; });
  }

  static Vertex first_moved(Permutation const &g)
  {
    Vertex v = 0;
    while (g(v) == v)
      ++v;
    return v;
  }

  bool fixes_prefix(Permutation const &g, std::size_t len) const
  {
    for (std::size_t k = 0; k < len; ++k)
      if (g(base_[k]) != base_[k])
        return false;
    return true;
  }

  void rebuild_orbit(std::size_t i)
  {
    Level &lvl = levels_[i];
    lvl.points.assign(1, base_[i]);
    lvl.rep.assign(degree_, std::nullopt);
    lvl.rep[base_[i]] = Permutation::identity(degree_);
    for (std::size_t k = 0; k < lvl.points.size(); ++k) {
      Vertex x = lvl.points[k];
      for (auto const &s : strong_) {
        if (!fixes_prefix(s, i))
          continue;
        Vertex y = s(x);
        if (!lvl.rep[y]) {
          lvl.rep[y] = compose(s, *lvl.rep[x]);
          lvl.points.push_back(y);
        }
      }
    }
  }

  // Sift g through levels from..end; returns the residue and the level where
  // sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const
  {
    for (std::size_t t = from; t < base_.size(); ++t) {
      Vertex beta = g(base_[t]);
      if (!levels_[t].rep[beta])
        return {std::move(g), t};
      g = compose(inverse(*levels_[t].rep[beta]), g);
    }
    return {std::move(g), base_.size()};
  }

  // Tests all Schreier generators of level i. On the first one that does not
  // sift, extends the chain and returns the level to resume from.
  std::optional<std::size_t> check_level(std::size_t i)
  {
    Level const &lvl = levels_[i];
    for (std::size_t k = 0; k < lvl.points.size(); ++k) {
      Vertex beta = lvl.points[k];
      for (std::size_t s_idx = 0; s_idx < strong_.size(); ++s_idx) {
        Permutation const &s = strong_[s_idx];
        if (!fixes_prefix(s, i))
          continue;
        auto schreier = compose(inverse(*lvl.rep[s(beta)]), compose(s, *lvl.rep[beta]));
        auto [h, j] = strip(std::move(schreier), i + 1);
        if (h.is_identity())
          continue;
        if (j == base_.size()) {
          base_.push_back(first_moved(h));
          levels_.emplace_back();
        }
        strong_.push_back(std::move(h));
        for (std::size_t l = i + 1; l <= j; ++l)
          rebuild_orbit(l);
        return j;
      }
    }
    return std::nullopt;
  }

  Vertex degree_;
  std::vector<Vertex> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

} // namespace

GroupOrder group_order(GeneratorSet const &gens)
{
  gens.check();
  StabilizerChain chain(gens.degree);
  chain.build(gens.gens);
  return chain.order();
}

bool is_automorphism(Graph const &g, Permutation const &p)
{
  if (p.degree() != g.order())
    return false;
  for (auto const &e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v)))
      return false;
  return true;
}

} // namespace lexidis
