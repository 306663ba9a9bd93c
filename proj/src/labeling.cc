#include "lexidis/labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lexidis
{

namespace
{

Label max_label(std::vector<Label> const &v)
{
  return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
}

std::size_t count_distinct(std::vector<Label> v)
{
  std::sort(v.begin(), v.end());
  return std::size_t(std::unique(v.begin(), v.end()) - v.begin());
}

std::vector<Label> rank_labels(std::vector<Label> const &v)
{
  std::vector<Label> values(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Label> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = Label(std::lower_bound(values.begin(), values.end(), v[i]) -
                   values.begin()) + 1;
  return out;
}

void check_positive(std::vector<Label> const &v, char const *what)
{
  auto it = std::find(v.begin(), v.end(), Label(0));
  if (it != v.end())
    throw std::invalid_argument(std::string(what) + " " +
                                std::to_string(it - v.begin()) +
                                " has label 0; labels must be positive");
}

} // namespace

Label VertexLabeling::label_count() const { return max_label(labels); }
std::size_t VertexLabeling::distinct() const { return count_distinct(labels); }

Label EdgeLabeling::label_count() const { return max_label(labels); }
std::size_t EdgeLabeling::distinct() const { return count_distinct(labels); }

Label EdgeLabeling::at(Graph const &g, Vertex u, Vertex v) const
{
  auto idx = g.edge_index(u, v);
  if (!idx)
    throw std::out_of_range("{" + std::to_string(u) + ", " + std::to_string(v) +
                            "} is not an edge");
  return labels.at(*idx);
}

void validate(Graph const &g, VertexLabeling const &l)
{
  if (l.labels.size() != g.order())
    throw std::invalid_argument("vertex labeling has " +
                                std::to_string(l.labels.size()) +
                                " entries for " + std::to_string(g.order()) +
                                " vertices");
  check_positive(l.labels, "vertex");
}

void validate(Graph const &g, EdgeLabeling const &l)
{
  if (l.labels.size() != g.size())
    throw std::invalid_argument("edge labeling has " +
                                std::to_string(l.labels.size()) +
                                " entries for " + std::to_string(g.size()) +
                                " edges");
  check_positive(l.labels, "edge");
}

VertexLabeling compress(VertexLabeling const &l) { return {rank_labels(l.labels)}; }
EdgeLabeling compress(EdgeLabeling const &l) { return {rank_labels(l.labels)}; }

} // namespace lexidis
