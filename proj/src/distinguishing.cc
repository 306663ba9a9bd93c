#include "lexidis/distinguishing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lexidis/autosearch.hpp"

namespace lexidis
{

namespace
{

constexpr Color kEdgeColor = Color(1) << 32;
constexpr Color kUnlabeled = Color(1) << 40;

// Depth-first search over restricted-growth sequences with labels 1..d.
// `preserved(labels, k)` reports whether a nontrivial automorphism fixes
// the unlabeled items k.. and preserves labels[0..k).
class LabelSearch
{
public:
  using Probe = std::function<bool(std::vector<Label> const &, std::size_t)>;

  LabelSearch(std::size_t items, Probe probe)
  : items_(items),
    probe_(std::move(probe)),
    labels_(items, 0)
  {}

  bool run(Label d)
  {
    d_ = d;
    std::fill(labels_.begin(), labels_.end(), 0);
    return dfs(0, 0);
  }

  std::vector<Label> const &labels() const { return labels_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  bool dfs(std::size_t k, Label used)
  {
    Label top = std::min<Label>(d_, used + 1);
    for (Label l = 1; l <= top; ++l) {
      labels_[k] = l;
      ++nodes_;
      if (probe_(labels_, k + 1))
        continue;
      if (k + 1 == items_ || dfs(k + 1, std::max(used, l)))
        return true;
    }
    labels_[k] = 0;
    return false;
  }

  std::size_t items_;
  Probe probe_;
  std::vector<Label> labels_;
  Label d_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace

bool is_distinguishing(Graph const &g, VertexLabeling const &l)
{
  validate(g, l);
  std::vector<Color> colors(l.labels.begin(), l.labels.end());
  return !find_preserving(g, colors).certificate;
}

bool is_distinguishing_edges(Graph const &g, EdgeLabeling const &l)
{
  return !find_preserving_edges(g, l).certificate;
}

NumberResult distinguishing_number(Graph const &g, std::optional<Label> d_max)
{
  Label cap = d_max.value_or(std::max<Label>(1, g.order()));
  if (cap == 0)
    throw std::invalid_argument("d_max must be positive");

  NumberResult result;
  if (g.order() == 0) {
    result.value = 1;
    return result;
  }

  std::vector<Color> colors(g.order());
  LabelSearch search(g.order(), [&](std::vector<Label> const &labels, std::size_t k) {
    for (Vertex v = 0; v < g.order(); ++v)
      colors[v] = v < k ? Color(labels[v]) : kUnlabeled + v;
    return find_preserving(g, colors).certificate.has_value();
  });

  for (Label d = 1; d <= cap; ++d) {
    if (search.run(d)) {
      result.value = d;
      result.witness.labels = search.labels();
      break;
    }
  }
  result.nodes = search.nodes();
  return result;
}

IndexResult distinguishing_index(Graph const &g, std::optional<Label> d_max)
{
  if (g.size() == 0)
    throw std::invalid_argument("distinguishing index needs at least one edge");
  Label cap = d_max.value_or(Label(g.size()));
  if (cap == 0)
    throw std::invalid_argument("d_max must be positive");

  IndexResult result;
  if (!find_preserving(g, std::span<Color const>{}).certificate) {
    result.value = 1;
    result.witness.labels.assign(g.size(), 1);
    return result;
  }

  Graph sub = subdivide(g);
  Vertex n = g.order();
  std::vector<Color> colors(sub.order(), 0);
  LabelSearch search(g.size(), [&](std::vector<Label> const &labels, std::size_t k) {
    for (std::size_t i = 0; i < g.size(); ++i)
      colors[n + i] = i < k ? kEdgeColor + labels[i] : kUnlabeled + i;
    return find_preserving(sub, colors, true, n).certificate.has_value();
  });

  for (Label d = 1; d <= cap; ++d) {
    if (search.run(d)) {
      result.value = d;
      result.witness.labels = search.labels();
      break;
    }
  }
  result.nodes = search.nodes();
  return result;
}

} // namespace lexidis
