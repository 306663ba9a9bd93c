#include "lexidis/autosearch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lexidis
{

namespace
{

constexpr Vertex kNone = ~Vertex(0);

// Ordered partition. A cell is identified by the index of its first slot in
// `lab`; cell_end is only meaningful at cell starts.
struct Partition
{
  std::vector<Vertex> lab;
  std::vector<Vertex> pos;
  std::vector<Vertex> cell_of;
  std::vector<Vertex> cell_end;
  Vertex cells = 0;

  Vertex size() const { return Vertex(lab.size()); }
  bool discrete() const { return cells == lab.size(); }
};

using Trace = std::vector<std::uint64_t>;

class Engine
{
public:
  Engine(Graph const &g, std::span<Color const> colors, SearchStats &stats)
  : g_(g),
    colors_(colors),
    stats_(stats),
    count_(g.order(), 0),
    cell_mark_(g.order(), 0),
    in_queue_(g.order(), 0)
  {
    Vertex n = g.order();
    Partition &p = root_;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), Vertex(0));
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](Vertex a, Vertex b) { return color(a) < color(b); });
    p.pos.resize(n);
    p.cell_of.resize(n);
    p.cell_end.assign(n, 0);

    std::vector<Vertex> starts;
    for (Vertex i = 0; i < n;) {
      Vertex j = i;
      while (j < n && color(p.lab[j]) == color(p.lab[i]))
        ++j;
      for (Vertex k = i; k < j; ++k) {
        p.cell_of[p.lab[k]] = i;
        p.pos[p.lab[k]] = k;
      }
      p.cell_end[i] = j;
      starts.push_back(i);
      ++p.cells;
      i = j;
    }
    refine(p, starts, nullptr, nullptr);
  }

  Partition const &root() const { return root_; }

  Color color(Vertex v) const { return colors_.empty() ? 0 : colors_[v]; }

  // First smallest non-singleton cell whose vertices are >= first_movable.
  Vertex target_cell(Partition const &p, Vertex first_movable) const
  {
    Vertex best = kNone;
    Vertex best_size = kNone;
    for (Vertex s = 0; s < p.size(); s = p.cell_end[s]) {
      Vertex sz = p.cell_end[s] - s;
      if (sz > 1 && sz < best_size && p.lab[s] >= first_movable) {
        best = s;
        best_size = sz;
      }
    }
    return best;
  }

  static Vertex least_in_cell(Partition const &p, Vertex c)
  {
    return *std::min_element(p.lab.begin() + c, p.lab.begin() + p.cell_end[c]);
  }

  static std::vector<Vertex> sorted_cell(Partition const &p, Vertex c)
  {
    std::vector<Vertex> cell(p.lab.begin() + c, p.lab.begin() + p.cell_end[c]);
    std::sort(cell.begin(), cell.end());
    return cell;
  }

  // Splits v off its cell as a singleton at the cell's start, then refines.
  // Returns false if the refinement trace departs from `expect`.
  bool individualize(Partition &p, Vertex v, Trace *out, Trace const *expect)
  {
    Vertex c = p.cell_of[v];
    Vertex e = p.cell_end[c];
    Vertex u = p.lab[c];
    std::swap(p.lab[c], p.lab[p.pos[v]]);
    p.pos[u] = p.pos[v];
    p.pos[v] = c;
    p.cell_end[c] = c + 1;
    for (Vertex k = c + 1; k < e; ++k)
      p.cell_of[p.lab[k]] = c + 1;
    p.cell_end[c + 1] = e;
    ++p.cells;
    Vertex splitter[] = {c};
    return refine(p, splitter, out, expect);
  }

  // Descends below the pair (left, right); `leaf` receives verified
  // automorphisms mapping left onto right and returns true to stop.
  template <typename Leaf>
  bool descend(Partition const &left, Partition const &right, Leaf &&leaf)
  {
    ++stats_.nodes_visited;
    if (left.discrete()) {
      std::vector<Vertex> image(left.size());
      for (Vertex k = 0; k < left.size(); ++k)
        image[left.lab[k]] = right.lab[k];
      if (!preserves(image))
        return false;
      return leaf(Permutation(std::move(image)));
    }

    Vertex c = target_cell(left, 0);
    Partition next_left = left;
    Trace trace;
    individualize(next_left, least_in_cell(left, c), &trace, nullptr);

    for (Vertex w : sorted_cell(right, c)) {
      Partition next_right = right;
      if (!individualize(next_right, w, nullptr, &trace))
        continue;
      if (descend(next_left, next_right, leaf))
        return true;
    }
    return false;
  }

private:
  bool preserves(std::vector<Vertex> const &image) const
  {
    for (Vertex u = 0; u < image.size(); ++u) {
      if (color(u) != color(image[u]))
        return false;
      for (Vertex x : g_.adjacency(u))
        if (x > u && !g_.adjacent(image[u], image[x]))
          return false;
    }
    return true;
  }

  bool refine(Partition &p, std::span<Vertex const> splitters, Trace *out,
              Trace const *expect)
  {
    ++stats_.refinements;
    std::size_t checked = 0;
    auto emit = [&](std::uint64_t x) {
      if (out)
        out->push_back(x);
      if (expect) {
        if (checked >= expect->size() || (*expect)[checked] != x)
          return false;
        ++checked;
      }
      return true;
    };

    std::vector<Vertex> queue(splitters.begin(), splitters.end());
    for (Vertex s : queue)
      in_queue_[s] = 1;

    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      Vertex s = queue[head];
      in_queue_[s] = 0;
      Vertex s_end = p.cell_end[s];

      touched_.clear();
      touched_cells_.clear();
      for (Vertex k = s; k < s_end; ++k) {
        for (Vertex x : g_.adjacency(p.lab[k])) {
          if (count_[x]++ == 0) {
            touched_.push_back(x);
            Vertex c = p.cell_of[x];
            if (!cell_mark_[c]) {
              cell_mark_[c] = 1;
              touched_cells_.push_back(c);
            }
          }
        }
      }
      std::sort(touched_cells_.begin(), touched_cells_.end());

      for (Vertex c : touched_cells_) {
        cell_mark_[c] = 0;
        if (!ok)
          continue;
        Vertex e = p.cell_end[c];
        auto first = p.lab.begin() + c;
        auto last = p.lab.begin() + e;
        std::sort(first, last, [&](Vertex a, Vertex b) {
          return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
        });
        for (Vertex k = c; k < e; ++k)
          p.pos[p.lab[k]] = k;

        Vertex lo = count_[p.lab[c]];
        Vertex hi = count_[p.lab[e - 1]];
        ok = emit(c) && emit(lo) && emit(hi);
        if (!ok || lo == hi)
          continue;

        bool was_queued = in_queue_[c];
        Vertex largest = c;
        Vertex largest_size = 0;
        std::vector<Vertex> fragments;
        for (Vertex k = c; k < e;) {
          Vertex j = k;
          while (j < e && count_[p.lab[j]] == count_[p.lab[k]])
            ++j;
          for (Vertex t = k; t < j; ++t)
            p.cell_of[p.lab[t]] = k;
          p.cell_end[k] = j;
          if (j - k > largest_size) {
            largest = k;
            largest_size = j - k;
          }
          ok = ok && emit((std::uint64_t(j - k) << 32) | count_[p.lab[k]]);
          fragments.push_back(k);
          k = j;
        }
        p.cells += Vertex(fragments.size() - 1);

        for (Vertex f : fragments) {
          if (was_queued ? f == c : f == largest)
            continue;
          in_queue_[f] = 1;
          queue.push_back(f);
        }
      }

      for (Vertex x : touched_)
        count_[x] = 0;
    }

    for (Vertex s : queue)
      in_queue_[s] = 0;
    if (expect && checked != expect->size())
      ok = false;
    return ok;
  }

  Graph const &g_;
  std::span<Color const> colors_;
  SearchStats &stats_;
  Partition root_;
  std::vector<Vertex> count_;
  std::vector<char> cell_mark_;
  std::vector<char> in_queue_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> touched_cells_;
};

void check_colors(Graph const &g, std::span<Color const> colors)
{
  if (!colors.empty() && colors.size() != g.order())
    throw std::invalid_argument("color array has " + std::to_string(colors.size()) +
                                " entries for " + std::to_string(g.order()) +
                                " vertices");
}

std::vector<Vertex> orbit_of(Vertex v, std::vector<Permutation const *> const &gens)
{
  std::vector<Vertex> orbit{v};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const *s : gens) {
      Vertex y = (*s)(orbit[i]);
      if (std::find(orbit.begin(), orbit.end(), y) == orbit.end())
        orbit.push_back(y);
    }
  }
  return orbit;
}

} // namespace

SearchResult find_preserving(ColoredGraph const &c, bool exclude_identity)
{
  return find_preserving(c.graph, c.color, exclude_identity, 0);
}

SearchResult find_preserving(Graph const &g, std::span<Color const> colors,
                             bool exclude_identity, Vertex first_movable)
{
  check_colors(g, colors);
  SearchResult result;
  if (!exclude_identity) {
    result.certificate = Permutation::identity(g.order());
    result.stats.found = true;
    return result;
  }

  Engine engine(g, colors, result.stats);
  Partition level = engine.root();
  for (;;) {
    Vertex c = engine.target_cell(level, first_movable);
    if (c == kNone)
      return result;

    Vertex v = Engine::least_in_cell(level, c);
    Partition left = level;
    Trace trace;
    engine.individualize(left, v, &trace, nullptr);

    for (Vertex w : Engine::sorted_cell(level, c)) {
      if (w == v)
        continue;
      Partition right = level;
      if (!engine.individualize(right, w, nullptr, &trace))
        continue;
      bool hit = engine.descend(left, right, [&](Permutation p) {
        result.certificate = std::move(p);
        return true;
      });
      if (hit) {
        result.stats.found = true;
        return result;
      }
    }
    level = std::move(left);
  }
}

AutomorphismList enumerate_automorphisms(Graph const &g, std::size_t cap)
{
  return enumerate_automorphisms(g, {}, cap);
}

AutomorphismList enumerate_automorphisms(Graph const &g, std::span<Color const> colors,
                                         std::size_t cap)
{
  if (cap == 0)
    throw std::invalid_argument("enumeration cap must be positive");
  check_colors(g, colors);

  SearchStats stats;
  Engine engine(g, colors, stats);
  AutomorphismList out;
  engine.descend(engine.root(), engine.root(), [&](Permutation p) {
    if (out.elements.size() == cap) {
      out.complete = false;
      return true;
    }
    out.elements.push_back(std::move(p));
    return false;
  });
  out.count = out.complete ? out.elements.size() : cap + 1;
  return out;
}

AutomorphismGroup automorphism_group(Graph const &g, std::span<Color const> colors)
{
  check_colors(g, colors);
  SearchStats stats;
  Engine engine(g, colors, stats);

  struct Level
  {
    Partition before;
    Partition after;
    Trace trace;
    Vertex cell;
    Vertex point;
  };
  std::vector<Level> path;
  Partition current = engine.root();
  while (!current.discrete()) {
    Level lvl;
    lvl.cell = engine.target_cell(current, 0);
    lvl.point = Engine::least_in_cell(current, lvl.cell);
    lvl.before = current;
    lvl.after = current;
    engine.individualize(lvl.after, lvl.point, &lvl.trace, nullptr);
    current = lvl.after;
    path.push_back(std::move(lvl));
  }

  std::vector<std::vector<Permutation>> found(path.size());
  GroupOrder order = 1;
  for (std::size_t i = path.size(); i-- > 0;) {
    Level const &lvl = path[i];
    std::vector<Permutation const *> gens;
    auto collect = [&] {
      gens.clear();
      for (std::size_t j = i; j < path.size(); ++j)
        for (auto const &p : found[j])
          gens.push_back(&p);
    };
    collect();
    auto orbit = orbit_of(lvl.point, gens);

    for (Vertex w : Engine::sorted_cell(lvl.before, lvl.cell)) {
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end())
        continue;
      Partition right = lvl.before;
      if (!engine.individualize(right, w, nullptr, &lvl.trace))
        continue;
      engine.descend(lvl.after, right, [&](Permutation p) {
        found[i].push_back(std::move(p));
        return true;
      });
      collect();
      orbit = orbit_of(lvl.point, gens);
    }
    order *= orbit.size();
  }

  AutomorphismGroup out;
  out.generators.degree = g.order();
  for (auto &lvl : found)
    for (auto &p : lvl)
      out.generators.gens.push_back(std::move(p));
  out.order = order;
  for (auto const &lvl : path)
    out.base.push_back(lvl.point);
  return out;
}

Graph subdivide(Graph const &g)
{
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  Vertex n = g.order();
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto const &e = g.edges()[i];
    edges.push_back({e.u, Vertex(n + i)});
    edges.push_back({e.v, Vertex(n + i)});
  }
  return Graph(Vertex(n + g.size()), edges);
}

SearchResult find_preserving_edges(Graph const &g, EdgeLabeling const &labels,
                                   bool exclude_identity)
{
  validate(g, labels);
  SearchResult result;
  if (!exclude_identity) {
    result.certificate = Permutation::identity(g.order());
    result.stats.found = true;
    return result;
  }

  Graph sub = subdivide(g);
  std::vector<Color> colors(sub.order(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    colors[g.order() + i] = (Color(1) << 32) + labels.labels[i];

  auto inner = find_preserving(sub, colors, true, g.order());
  result.stats = inner.stats;
  if (inner.certificate) {
    std::vector<Vertex> image(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
      image[v] = (*inner.certificate)(v);
    result.certificate = Permutation(std::move(image));
  }
  return result;
}

} // namespace lexidis
