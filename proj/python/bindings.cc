#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "lexidis/autosearch.hpp"
#include "lexidis/constructions.hpp"
#include "lexidis/distinguishing.hpp"
#include "lexidis/graph.hpp"
#include "lexidis/graph_io.hpp"
#include "lexidis/lexprod.hpp"
#include "lexidis/permgroup.hpp"

namespace py = pybind11;
using namespace lexidis;

namespace
{

using Pair = std::pair<Vertex, Vertex>;
using Labels = std::vector<Label>;

Graph make_graph(Vertex n, std::vector<Pair> const &pairs)
{
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs)
    edges.push_back({u, v});
  return Graph(n, edges);
}

std::vector<Pair> edge_pairs(Graph const &g)
{
  std::vector<Pair> out;
  for (auto e : g.edges())
    out.emplace_back(e.u, e.v);
  return out;
}

py::object to_int(GroupOrder const &o)
{
  return py::reinterpret_steal<py::object>(PyLong_FromString(o.str().c_str(), nullptr, 10));
}

std::vector<Vertex> image(Permutation const &p)
{
  return {p.image().begin(), p.image().end()};
}

std::optional<std::vector<Vertex>> certificate(SearchResult const &r)
{
  if (!r.certificate)
    return std::nullopt;
  return image(*r.certificate);
}

GraphFormat format_of(std::string const &f)
{
  if (f == "g6" || f == "graph6")
    return GraphFormat::Graph6;
  if (f == "el" || f == "edgelist")
    return GraphFormat::EdgeList;
  throw std::invalid_argument("format must be 'el' or 'g6', got '" + f + "'");
}

} // namespace

PYBIND11_MODULE(_lexidis, m)
{
  m.doc() = "Lexicographic products, automorphism search and distinguishing labelings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
    .def(py::init([](Vertex n, std::vector<Pair> const &edges) { return make_graph(n, edges); }),
         py::arg("n"), py::arg("edges") = std::vector<Pair>{})
    .def_property_readonly("order", &Graph::order)
    .def_property_readonly("size", &Graph::size)
    .def_property_readonly("edges", &edge_pairs)
    .def("adjacent", &Graph::adjacent)
    .def("degree", &Graph::degree)
    .def("neighbors", [](Graph const &g, Vertex v) { return neighbors(g, v); })
    .def("is_connected", [](Graph const &g) { return is_connected(g); })
    .def("complement", [](Graph const &g) { return complement(g); })
    .def("__len__", &Graph::order)
    .def(py::self == py::self)
    .def("__repr__", [](Graph const &g) {
      return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ")";
    });

  m.def("path", &path, py::arg("n"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("complete", &complete, py::arg("n"));
  m.def("star", &star, py::arg("n"));
  m.def("spider", &spider, py::arg("n"));

  m.def("parse_graph", [](std::string const &text) { return parse_graph(text); }, py::arg("text"),
        "Edge list or graph6, sniffed from the first byte.");
  m.def("write_graph",
        [](Graph const &g, std::string const &fmt) { return write_graph(g, format_of(fmt)); },
        py::arg("g"), py::arg("format") = "el");

  m.def("lex_product", &lex_product, py::arg("G"), py::arg("H"));
  m.def("lex_power", &lex_power, py::arg("G"), py::arg("k"));

  m.def("automorphism_group_order",
        [](Graph const &g) { return to_int(automorphism_group(g).order); }, py::arg("g"));
  m.def("automorphism_generators", [](Graph const &g) {
    std::vector<std::vector<Vertex>> out;
    for (auto const &p : automorphism_group(g).generators.gens)
      out.push_back(image(p));
    return out;
  }, py::arg("g"));
  m.def("find_preserving",
        [](Graph const &g, std::vector<Color> const &colors) {
          return certificate(find_preserving(g, colors));
        },
        py::arg("g"), py::arg("colors"),
        "Nontrivial color-preserving automorphism as an image list, or None.");
  m.def("find_preserving_edges",
        [](Graph const &g, Labels const &labels) {
          return certificate(find_preserving_edges(g, EdgeLabeling{labels}));
        },
        py::arg("g"), py::arg("labels"));
  m.def("sabidussi_equal", &sabidussi_equal, py::arg("G"), py::arg("H"));

  m.def("is_distinguishing",
        [](Graph const &g, Labels const &l) { return is_distinguishing(g, VertexLabeling{l}); },
        py::arg("g"), py::arg("labels"));
  m.def("is_distinguishing_edges",
        [](Graph const &g, Labels const &l) { return is_distinguishing_edges(g, EdgeLabeling{l}); },
        py::arg("g"), py::arg("labels"));
  m.def("distinguishing_number",
        [](Graph const &g, std::optional<Label> d_max) {
          py::gil_scoped_release release;
          auto r = distinguishing_number(g, d_max);
          return std::make_pair(r.value, r.witness.labels);
        },
        py::arg("g"), py::arg("d_max") = std::nullopt,
        "(value, witness); value is None when no labeling fits within d_max.");
  m.def("distinguishing_index",
        [](Graph const &g, std::optional<Label> d_max) {
          py::gil_scoped_release release;
          auto r = distinguishing_index(g, d_max);
          return std::make_pair(r.value, r.witness.labels);
        },
        py::arg("g"), py::arg("d_max") = std::nullopt);

  m.def("m_value", &m_value, py::arg("dG"), py::arg("dH"));
  m.def("spider_dnum_k2", &spider_dnum_k2, py::arg("n"));
  m.def("spider_labeling", [](Vertex n) { return spider_labeling(n).labels; }, py::arg("n"));
  m.def("label_product_upper",
        [](Graph const &G, Graph const &H, Labels const &LG, Labels const &LH) {
          return label_product_upper(G, H, {LG}, {LH}).labels;
        },
        py::arg("G"), py::arg("H"), py::arg("LG"), py::arg("LH"));
  m.def("label_thm22",
        [](Graph const &G, Graph const &H, Labels const &LG, Labels const &LH) {
          return label_thm22(G, H, {LG}, {LH}).labels;
        },
        py::arg("G"), py::arg("H"), py::arg("LG"), py::arg("LH"));
  m.def("edge_label_thm31",
        [](Graph const &G, Graph const &H, Labels const &LG, Labels const &LH) {
          return edge_label_thm31(G, H, {LG}, {LH}).labels;
        },
        py::arg("G"), py::arg("H"), py::arg("LG"), py::arg("LH"));
  m.def("edge_label_k2h",
        [](Graph const &H) {
          auto r = edge_label_k2h(H);
          return std::make_pair(r.labeling.labels, r.from_scheme);
        },
        py::arg("H"), "(labels, from_scheme)");
  m.def("edge_label_star",
        [](Vertex n, Graph const &H, Labels const &LH) { return edge_label_star(n, H, {LH}).labels; },
        py::arg("n"), py::arg("H"), py::arg("LH"));
  m.def("edge_label_path", [](Vertex n, Graph const &H) { return edge_label_path(n, H).labels; },
        py::arg("n"), py::arg("H"));
  m.def("edge_label_gp2", [](Graph const &G, Labels const &LG) { return edge_label_gp2(G, {LG}).labels; },
        py::arg("G"), py::arg("LG"));
  m.def("edge_label_small_g",
        [](Graph const &G, Graph const &H) { return edge_label_small_g(G, H).labels; },
        py::arg("G"), py::arg("H"));
  m.def("edge_label_power", [](Graph const &G, unsigned k) { return edge_label_power(G, k).labels; },
        py::arg("G"), py::arg("k"));
}
