#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexidis/autosearch.hpp"
#include "lexidis/constructions.hpp"
#include "lexidis/distinguishing.hpp"
#include "lexidis/graph.hpp"
#include "lexidis/graph_io.hpp"
#include "lexidis/lexprod.hpp"
#include "lexidis/permgroup.hpp"

namespace lexidis::cli
{

namespace
{

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

class Timer
{
public:
  double ms() const
  {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Context
{
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  bool json = false;
  bool stdin_used = false;
  Timer timer;
};

std::string read_input(Context &ctx, std::string const &path)
{
  std::ostringstream buf;
  if (path == "-") {
    if (ctx.stdin_used)
      throw UsageError("-: standard input can only be read once");
    ctx.stdin_used = true;
    buf << ctx.in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw UsageError(path + ": cannot open file");
  buf << f.rdbuf();
  return buf.str();
}

Graph load_graph(Context &ctx, std::string const &path)
{
  std::string text = read_input(ctx, path);
  try {
    return parse_graph(text);
  } catch (std::exception const &e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

Labeling load_labeling(Context &ctx, std::string const &path, Graph const &g)
{
  std::string text = read_input(ctx, path);
  try {
    return parse_labeling(text, g);
  } catch (std::exception const &e) {
    throw UsageError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

bool to_stdout(std::string const &path) { return path.empty() || path == "-"; }

void write_file(std::string const &path, std::string const &text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw UsageError(path + ": cannot write file");
}

GraphFormat output_format(std::string const &path, std::string const &flag)
{
  if (flag == "g6" || flag == "graph6")
    return GraphFormat::Graph6;
  if (flag == "el" || flag == "edgelist")
    return GraphFormat::EdgeList;
  if (!flag.empty())
    throw UsageError("--format: expected el or g6, got '" + flag + "'");
  auto ends_with = [&](std::string_view s) {
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  return ends_with(".g6") ? GraphFormat::Graph6 : GraphFormat::EdgeList;
}

std::optional<std::size_t> env_cap()
{
  char const *raw = std::getenv("LEXIDIS_CAP");
  if (!raw || !*raw)
    return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0)
      throw std::invalid_argument("bad");
    return std::size_t(v);
  } catch (std::exception const &) {
    throw UsageError(std::string("LEXIDIS_CAP: expected a positive integer, got '") + raw + "'");
  }
}

void emit(Context &ctx, Json obj, std::string const &human)
{
  if (ctx.json) {
    obj["time_ms"] = ctx.timer.ms();
    ctx.out << obj.dump() << '\n';
  } else {
    ctx.out << human;
  }
}

std::string order_string(GroupOrder const &o) { return o.str(); }

Json labels_json(std::vector<Label> const &l) { return Json(l); }

// gen

int cmd_gen(Context &ctx, std::string const &family, unsigned n, std::string const &output,
            std::string const &format)
{
  Graph g = [&] {
    try {
      if (family == "path")
        return path(n);
      if (family == "cycle")
        return cycle(n);
      if (family == "complete")
        return complete(n);
      if (family == "star")
        return star(n);
      if (family == "spider")
        return spider(n);
    } catch (std::exception const &e) {
      throw UsageError(std::string("--n: ") + e.what());
    }
    throw UsageError("--family: unknown family '" + family + "'");
  }();

  auto fmt = output_format(output, format);
  std::string text = write_graph(g, fmt);
  if (!to_stdout(output))
    write_file(output, text);

  Json obj{{"command", "gen"},
           {"inputs", {{"family", family}, {"n", n}}},
           {"value", {{"order", g.order()}, {"size", g.size()}}}};
  if (to_stdout(output))
    obj["graph"] = text;
  else
    obj["output"] = output;
  emit(ctx, obj, to_stdout(output) ? text : "");
  return kOk;
}

// product

int cmd_product(Context &ctx, std::vector<std::string> const &inputs, unsigned power,
                std::string const &output, std::string const &format)
{
  Graph p;
  Json in;
  if (power > 0) {
    if (inputs.size() != 1)
      throw UsageError("--power: expects exactly one graph input");
    Graph g = load_graph(ctx, inputs[0]);
    p = lex_power(g, power);
    in = {{"G", inputs[0]}, {"power", power}};
  } else {
    if (inputs.size() != 2)
      throw UsageError("product: expects two graph inputs (or one with --power)");
    Graph G = load_graph(ctx, inputs[0]);
    Graph H = load_graph(ctx, inputs[1]);
    p = lex_product(G, H);
    in = {{"G", inputs[0]}, {"H", inputs[1]}};
  }

  auto fmt = output_format(output, format);
  std::string text = write_graph(p, fmt);
  if (!to_stdout(output))
    write_file(output, text);

  Json obj{{"command", "product"},
           {"inputs", in},
           {"value", {{"order", p.order()}, {"size", p.size()}}}};
  if (to_stdout(output))
    obj["graph"] = text;
  else
    obj["output"] = output;
  emit(ctx, obj, to_stdout(output) ? text : "");
  return kOk;
}

// aut

int cmd_aut(Context &ctx, std::string const &input, bool elements, std::optional<std::size_t> cap)
{
  Graph g = load_graph(ctx, input);
  auto group = automorphism_group(g);
  std::size_t limit = cap.value_or(env_cap().value_or(kDefaultGroupCap));

  Json gens = Json::array();
  std::ostringstream human;
  human << "order " << order_string(group.order) << '\n';
  human << "generators " << group.generators.gens.size() << '\n';
  for (auto const &p : group.generators.gens) {
    gens.push_back(p.cycles());
    human << p.cycles() << '\n';
  }

  Json obj{{"command", "aut"},
           {"inputs", {{"G", input}}},
           {"value", order_string(group.order)},
           {"generators", gens}};

  int status = kOk;
  if (elements) {
    auto list = enumerate_automorphisms(g, limit);
    if (!list.complete) {
      obj["elements"] = nullptr;
      obj["status"] = "cap_exceeded";
      obj["cap"] = limit;
      human << "elements: more than " << limit << " (cap exceeded)\n";
      status = kCapExceeded;
    } else {
      Json els = Json::array();
      human << "elements " << list.elements.size() << '\n';
      for (auto const &p : list.elements) {
        els.push_back(p.cycles());
        human << p.cycles() << '\n';
      }
      obj["elements"] = els;
    }
  }
  emit(ctx, obj, human.str());
  if (status == kCapExceeded && !ctx.json)
    ctx.err << "aut: group has more than " << limit << " elements; raise --cap or LEXIDIS_CAP\n";
  return status;
}

// dnum / dindex

std::optional<Label> d_cap(std::optional<std::size_t> cap)
{
  if (cap)
    return Label(*cap);
  if (auto e = env_cap())
    return Label(std::min<std::size_t>(*e, 0xffffffffu));
  return std::nullopt;
}

int cmd_dnum(Context &ctx, std::string const &input, std::optional<std::size_t> cap)
{
  Graph g = load_graph(ctx, input);
  auto r = distinguishing_number(g, d_cap(cap));
  Json obj{{"command", "dnum"}, {"inputs", {{"G", input}}}, {"nodes", r.nodes}};
  if (!r.value) {
    obj["value"] = nullptr;
    obj["status"] = "cap_exceeded";
    emit(ctx, obj, "");
    ctx.err << "dnum: no distinguishing labeling within the label cap\n";
    return kCapExceeded;
  }
  obj["value"] = *r.value;
  obj["witness"] = labels_json(r.witness.labels);
  emit(ctx, obj, std::to_string(*r.value) + '\n' + write_labeling(g, r.witness));
  return kOk;
}

int cmd_dindex(Context &ctx, std::string const &input, std::optional<std::size_t> cap)
{
  Graph g = load_graph(ctx, input);
  if (g.size() == 0)
    throw UsageError(input + ": distinguishing index needs a graph with at least one edge");
  auto r = distinguishing_index(g, d_cap(cap));
  Json obj{{"command", "dindex"}, {"inputs", {{"G", input}}}, {"nodes", r.nodes}};
  if (!r.value) {
    obj["value"] = nullptr;
    obj["status"] = "cap_exceeded";
    emit(ctx, obj, "");
    ctx.err << "dindex: no distinguishing edge labeling within the label cap\n";
    return kCapExceeded;
  }
  obj["value"] = *r.value;
  obj["witness"] = labels_json(r.witness.labels);
  emit(ctx, obj, std::to_string(*r.value) + '\n' + write_labeling(g, r.witness));
  return kOk;
}

// verify

struct Verdict
{
  bool distinguishing;
  std::optional<Permutation> certificate;
};

Verdict verify_labeling(Graph const &g, Labeling const &l)
{
  SearchResult r;
  if (auto const *v = std::get_if<VertexLabeling>(&l)) {
    std::vector<Color> colors(v->labels.begin(), v->labels.end());
    r = find_preserving(g, colors);
  } else {
    r = find_preserving_edges(g, std::get<EdgeLabeling>(l));
  }
  return {!r.certificate, r.certificate};
}

int report_verdict(Context &ctx, Json obj, Verdict const &v)
{
  obj["value"] = v.distinguishing;
  if (v.certificate)
    obj["certificate"] = v.certificate->cycles();
  std::string human = v.distinguishing ? "DISTINGUISHING\n"
                                       : "NOT DISTINGUISHING\n" + v.certificate->cycles() + '\n';
  emit(ctx, obj, human);
  return v.distinguishing ? kOk : kNegative;
}

int cmd_verify(Context &ctx, std::string const &graph_path, std::string const &labels_path)
{
  Graph g = load_graph(ctx, graph_path);
  Labeling l = load_labeling(ctx, labels_path, g);
  Json obj{{"command", "verify"},
           {"inputs", {{"G", graph_path}, {"labeling", labels_path}}},
           {"kind", std::holds_alternative<VertexLabeling>(l) ? "vertex" : "edge"}};
  return report_verdict(ctx, obj, verify_labeling(g, l));
}

// label

struct Built
{
  Graph product;
  Labeling labeling;
  Json extra = Json::object();
};

EdgeLabeling index_witness(Graph const &g)
{
  if (g.size() == 0)
    return {};
  return distinguishing_index(g).witness;
}

Built build_label(Context &ctx, std::string const &method, std::vector<std::string> const &inputs,
                  std::optional<unsigned> n, std::optional<unsigned> k)
{
  auto need = [&](std::size_t count) {
    if (inputs.size() != count)
      throw UsageError("--method " + method + ": expects " + std::to_string(count) +
                       " graph input(s), got " + std::to_string(inputs.size()));
  };
  auto need_flag = [&](std::optional<unsigned> const &v, char const *flag) {
    if (!v)
      throw UsageError("--method " + method + ": requires " + flag);
    return *v;
  };

  if (method == "thm21" || method == "thm22") {
    need(2);
    Graph G = load_graph(ctx, inputs[0]);
    Graph H = load_graph(ctx, inputs[1]);
    auto LG = distinguishing_number(G).witness;
    auto LH = distinguishing_number(H).witness;
    Built b{lex_product(G, H), {}};
    if (method == "thm21") {
      b.labeling = label_product_upper(G, H, LG, LH);
      b.extra["bound"] = product_upper_bound(LG, LH);
    } else {
      b.labeling = label_thm22(G, H, LG, LH);
      b.extra["bound"] = LH.distinct() + m_value(LG.distinct(), Label(LH.distinct()));
    }
    return b;
  }
  if (method == "thm31") {
    need(2);
    Graph G = load_graph(ctx, inputs[0]);
    Graph H = load_graph(ctx, inputs[1]);
    return {lex_product(G, H), edge_label_thm31(G, H, index_witness(G), index_witness(H))};
  }
  if (method == "prop32") {
    need(1);
    Graph H = load_graph(ctx, inputs[0]);
    auto r = edge_label_k2h(H);
    Built b{lex_product(complete(2), H), r.labeling};
    b.extra["from_scheme"] = r.from_scheme;
    return b;
  }
  if (method == "prop33") {
    need(1);
    unsigned nn = need_flag(n, "--n");
    Graph H = load_graph(ctx, inputs[0]);
    auto LH = index_witness(H);
    Built b{lex_product(star(nn), H), edge_label_star(nn, H, LH)};
    b.extra["bound"] = star_label_bound(nn, H.order(), LH.label_count());
    return b;
  }
  if (method == "prop34") {
    need(1);
    unsigned nn = need_flag(n, "--n");
    Graph H = load_graph(ctx, inputs[0]);
    return {lex_product(path(nn), H), edge_label_path(nn, H)};
  }
  if (method == "thm35") {
    need(1);
    Graph G = load_graph(ctx, inputs[0]);
    auto LG = index_witness(G);
    Built b{lex_product(G, path(2)), edge_label_gp2(G, LG)};
    b.extra["bound"] = t35_label_bound(LG.label_count());
    return b;
  }
  if (method == "thm36") {
    need(2);
    Graph G = load_graph(ctx, inputs[0]);
    Graph H = load_graph(ctx, inputs[1]);
    return {lex_product(G, H), edge_label_small_g(G, H)};
  }
  if (method == "power") {
    need(1);
    unsigned kk = need_flag(k, "--k");
    Graph G = load_graph(ctx, inputs[0]);
    return {lex_power(G, kk), edge_label_power(G, kk)};
  }
  throw UsageError("--method: unknown method '" + method + "'");
}

int cmd_label(Context &ctx, std::string const &method, std::vector<std::string> const &inputs,
              std::optional<unsigned> n, std::optional<unsigned> k, std::string const &output,
              bool certify)
{
  Built b;
  try {
    b = build_label(ctx, method, inputs, n, k);
  } catch (std::invalid_argument const &e) {
    throw UsageError("--method " + method + ": precondition failed: " + e.what());
  }

  std::string text;
  Json witness;
  std::size_t count = 0;
  std::visit(
    [&](auto const &l) {
      text = write_labeling(b.product, l);
      witness = labels_json(l.labels);
      count = l.distinct();
    },
    b.labeling);
  if (!to_stdout(output))
    write_file(output, text);

  Json in = Json::array();
  for (auto const &i : inputs)
    in.push_back(i);
  Json obj{{"command", "label"},
           {"inputs", {{"method", method}, {"graphs", in}}},
           {"value", count},
           {"witness", witness}};
  if (n)
    obj["inputs"]["n"] = *n;
  if (k)
    obj["inputs"]["k"] = *k;
  for (auto const &[key, val] : b.extra.items())
    obj[key] = val;

  std::string human = to_stdout(output) ? text : "";
  if (!certify) {
    emit(ctx, obj, human);
    return kOk;
  }
  auto v = verify_labeling(b.product, b.labeling);
  obj["certified"] = v.distinguishing;
  if (v.certificate)
    obj["certificate"] = v.certificate->cycles();
  human += v.distinguishing ? "# certified: DISTINGUISHING\n"
                            : "# NOT DISTINGUISHING " + v.certificate->cycles() + '\n';
  emit(ctx, obj, human);
  return v.distinguishing ? kOk : kNegative;
}

// bounds

class Lazy
{
public:
  explicit Lazy(std::function<std::uint64_t()> f)
  : f_(std::move(f))
  {}
  std::uint64_t operator()()
  {
    if (!v_)
      v_ = f_();
    return *v_;
  }

private:
  std::function<std::uint64_t()> f_;
  std::optional<std::uint64_t> v_;
};

int cmd_bounds(Context &ctx, std::vector<std::string> const &inputs, std::optional<unsigned> k)
{
  if (inputs.empty() || inputs.size() > 2)
    throw UsageError("bounds: expects G and optionally H");
  Graph G = load_graph(ctx, inputs[0]);
  std::optional<Graph> H;
  if (inputs.size() == 2)
    H = load_graph(ctx, inputs[1]);

  Lazy dG([&] { return std::uint64_t(*distinguishing_number(G).value); });
  Lazy dpG([&] { return std::uint64_t(*distinguishing_index(G).value); });
  Lazy dH([&] { return std::uint64_t(*distinguishing_number(*H).value); });
  Lazy dpH([&] { return std::uint64_t(*distinguishing_index(*H).value); });

  Json rows = Json::object();
  std::ostringstream human;
  auto ok = [&](char const *name, std::string const &what, Json value) {
    rows[name] = {{"applies", true}, {"bound", what}, {"value", value}};
    human << name << ": " << what << " = " << value.dump() << '\n';
  };
  auto skip = [&](char const *name, std::string const &why) {
    rows[name] = {{"applies", false}, {"reason", why}};
    human << name << ": n/a (" << why << ")\n";
  };
  bool isK2 = G.order() == 2 && G.size() == 1;

  if (!H) {
    for (auto name : {"product", "replacement", "inherit", "p2", "small", "k2", "star", "path"})
      skip(name, "needs H");
  } else {
    bool sab = sabidussi_equal(G, *H);
    bool hK2 = H->order() == 2 && H->size() == 1;
    ok("product", "D(H) <= D(G[H]) <= D(G)D(H)", Json::array({dH(), dG() * dH()}));
    if (sab)
      ok("replacement", "D(G[H]) <= D(H)+M", dH() + m_value(dG(), Label(dH())));
    else
      skip("replacement", "Aut(G[H]) is not Aut(G)[Aut(H)]");

    if (!sab)
      skip("inherit", "Aut(G[H]) is not Aut(G)[Aut(H)]");
    else if (hK2)
      skip("inherit", "H is K_2");
    else if (isK2)
      skip("inherit", "G is K_2, where the bound can fail; see k2");
    else if (G.size() == 0 || H->size() == 0)
      skip("inherit", "D' needs edges in G and H");
    else
      ok("inherit", "D'(G[H]) <= max{D'(G),D'(H)}", std::max(dpG(), dpH()));

    if (!hK2)
      skip("p2", "H is not P_2");
    else if (!sab)
      skip("p2", "S(G) is not the diagonal");
    else if (G.size() == 0)
      skip("p2", "G has no edges");
    else
      ok("p2", "D'(G[P_2]) <= min{k : sum capacities >= D'(G)}", t35_label_bound(dpG()));

    if (!is_connected(G) || !is_connected(*H))
      skip("small", "G and H must be connected");
    else if (G.order() > H->size() + 1)
      skip("small", "|V(G)| > |E(H)|+1");
    else if (!sab)
      skip("small", "Aut(G[H]) is not Aut(G)[Aut(H)]");
    else
      ok("small", "D'(G[H]) <= 2", 2);

    if (!isK2)
      skip("k2", "G is not K_2");
    else if (!is_connected(*H))
      skip("k2", "H is not connected");
    else
      ok("k2", "D'(K_2[H])", H->order() == 1 ? 1 : H->order() == 2 ? 3 : 2);

    Vertex sn = G.order() - 1;
    if (G.order() < 3 || !(G == star(sn)))
      skip("star", "G is not K_{1,n} with n >= 2");
    else if (!is_connected(*H) || H->order() < 2)
      skip("star", "H must be connected with at least 2 vertices");
    else
      ok("star", "D'(K_{1,n}[H]) <= max{D'(H), ceil(n^(1/m^2))} (+1 if m=2, n=r^4)",
         star_label_bound(sn, H->order(), Label(dpH())));

    if (G.order() < 3 || !(G == path(G.order())))
      skip("path", "G is not P_n with n >= 3");
    else if (!is_connected(*H))
      skip("path", "H is not connected");
    else
      ok("path", "D'(P_n[H])", 2);
  }

  Vertex spn = (G.order() - 1) / 2;
  if (G.order() % 2 == 1 && spn >= 3 && G == spider(spn))
    ok("spider", "D(G_n), D(G_n[K_2])",
       Json::array({ceil_sqrt(spn), spider_dnum_k2(spn)}));
  else
    skip("spider", "G is not a spider G_n with n >= 3");

  if (!k) {
    skip("power_dnum", "needs --k");
    skip("power_dindex", "needs --k");
  } else if (!sabidussi_equal(G, G)) {
    skip("power_dnum", "Aut(G[G]) is not Aut(G)[Aut(G)]");
    skip("power_dindex", "Aut(G[G]) is not Aut(G)[Aut(G)]");
  } else {
    auto [lo, hi] = power_dnum_bounds(G, *k);
    ok("power_dnum", "D(G) <= D(G^k) <= D(G)+k-1", Json::array({lo, hi}));
    if (*k >= 2 && is_connected(G) && G.size() > 0)
      ok("power_dindex", "D'(G^k) <= 2", 2);
    else
      skip("power_dindex", "needs k >= 2 and G connected with an edge");
  }

  Json in = {{"G", inputs[0]}};
  if (H)
    in["H"] = inputs[1];
  if (k)
    in["k"] = *k;
  emit(ctx, Json{{"command", "bounds"}, {"inputs", in}, {"value", rows}}, human.str());
  return kOk;
}

} // namespace

int run(std::vector<std::string> const &args, std::istream &in, std::ostream &out,
        std::ostream &err)
{
  Context ctx{in, out, err, false, false, {}};

  CLI::App app{"Distinguishing labelings of lexicographic products", "lexidis"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("--json", ctx.json, "One JSON object per line");

  std::string family, output, format, method, input, labels_path;
  unsigned n = 0, power = 0;
  std::vector<std::string> inputs;
  std::optional<std::size_t> cap;
  std::optional<unsigned> opt_n, opt_k;
  bool elements = false, certify = false;

  auto *gen = app.add_subcommand("gen", "Generate a standard graph");
  gen->add_option("--family", family, "path, cycle, complete, star or spider")->required();
  gen->add_option("--n", n, "Family parameter")->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");
  gen->add_option("--format", format, "el or g6 (default from extension)");

  auto *prod = app.add_subcommand("product", "Lexicographic product G[H] or power G^k");
  prod->add_option("graphs", inputs, "G and H")->required();
  prod->add_option("--power", power, "Write G^k instead")->check(CLI::PositiveNumber);
  prod->add_option("-o,--output", output, "Output file (default stdout)");
  prod->add_option("--format", format, "el or g6 (default from extension)");

  auto *aut = app.add_subcommand("aut", "Automorphism group order and generators");
  aut->add_option("graph", input, "Graph file")->required();
  aut->add_flag("--elements", elements, "List every element");
  aut->add_option("--cap", cap, "Element cap for --elements")->check(CLI::PositiveNumber);

  auto *dnum = app.add_subcommand("dnum", "Distinguishing number");
  dnum->add_option("graph", input, "Graph file")->required();
  dnum->add_option("--cap", cap, "Largest label count tried")->check(CLI::PositiveNumber);

  auto *dindex = app.add_subcommand("dindex", "Distinguishing index");
  dindex->add_option("graph", input, "Graph file")->required();
  dindex->add_option("--cap", cap, "Largest label count tried")->check(CLI::PositiveNumber);

  auto *label = app.add_subcommand("label", "Construct a labeling of a product");
  label->add_option("--method", method, "thm21 thm22 thm31 prop32 prop33 prop34 thm35 thm36 power")
    ->required();
  label->add_option("graphs", inputs, "Input graphs");
  label->add_option("--n", opt_n, "n for prop33 / prop34")->check(CLI::PositiveNumber);
  label->add_option("--k", opt_k, "k for power")->check(CLI::PositiveNumber);
  label->add_option("-o,--output", output, "Labeling file (default stdout)");
  label->add_flag("--certify", certify, "Verify the result");

  auto *verify = app.add_subcommand("verify", "Check a labeling");
  verify->add_option("graph", input, "Graph file")->required();
  verify->add_option("labeling", labels_path, "Labeling file")->required();

  auto *bounds = app.add_subcommand("bounds", "Every applicable bound");
  bounds->add_option("graphs", inputs, "G and optionally H")->required();
  bounds->add_option("--k", opt_k, "Power exponent")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(ctx, family, n, output, format);
    if (prod->parsed())
      return cmd_product(ctx, inputs, power, output, format);
    if (aut->parsed())
      return cmd_aut(ctx, input, elements, cap);
    if (dnum->parsed())
      return cmd_dnum(ctx, input, cap);
    if (dindex->parsed())
      return cmd_dindex(ctx, input, cap);
    if (label->parsed())
      return cmd_label(ctx, method, inputs, opt_n, opt_k, output, certify);
    if (verify->parsed())
      return cmd_verify(ctx, input, labels_path);
    if (bounds->parsed())
      return cmd_bounds(ctx, inputs, opt_k);
  } catch (UsageError const &e) {
    err << "lexidis: " << e.what() << '\n';
    return kUsage;
  } catch (std::invalid_argument const &e) {
    err << "lexidis: " << e.what() << '\n';
    return kUsage;
  } catch (std::out_of_range const &e) {
    err << "lexidis: " << e.what() << '\n';
    return kUsage;
  } catch (std::overflow_error const &e) {
    err << "lexidis: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace lexidis::cli
