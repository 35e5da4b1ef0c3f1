#include "flipdist/cli.hpp"

#include "flipdist/corientations.hpp"
#include "flipdist/distance.hpp"
#include "flipdist/error.hpp"
#include "flipdist/fixtures.hpp"
#include "flipdist/generators.hpp"
#include "flipdist/io.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/orientations.hpp"
#include "flipdist/polytope.hpp"
#include "flipdist/reductions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace flipdist::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string fixture;
  std::string graph;
  std::string x;
  std::string y;
  std::string alpha;
  std::string matching;
  std::string sequence;
  std::string kind = "auto";
  std::string mode = "vertex";
  std::string from;
  std::string poset;
  std::string matroids;
  std::string a;
  std::string b;
  std::string grid;
  std::string caps;
  std::string out;
  std::string format = "json";
  std::vector<std::string> random_poset;
  std::vector<std::string> random_c;
  long max_depth = -1;
  std::size_t cap = 100000;
  bool list = false;
  bool height2 = false;
};

// Loaded once per invocation: the fixture (if named) and the graph orientations refer to.
struct Context {
  std::optional<Fixture> fixture;
  GraphPtr graph;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Context make_context(const Options& o) {
  Context c;
  if (!o.fixture.empty()) {
    c.fixture = load_fixture(o.fixture);
    c.graph = c.fixture->graph;
  }
  if (!o.graph.empty()) c.graph = std::make_shared<const Graph>(parse_graph(read_file(o.graph)));
  return c;
}

// A file name, or (when the file is absent) a fixture orientation named by the
// spec itself or by its stem, so `--x bottom.json --fixture fig7` works.
Orientation load_orientation(const Context& c, const std::string& spec, const char* what) {
  if (spec.empty()) throw ValidationError(std::string("missing --") + what);
  const fs::path p(spec);
  if (fs::is_regular_file(p)) {
    const Json j = read_json_file(p);
    if (j.is_object() && !j.contains("graph")) {
      if (!c.graph) throw ValidationError(std::string(what) + ": orientation without a graph needs --graph or --fixture");
      if (!j.contains("tails") || !j["tails"].is_array()) throw ValidationError(std::string(what) + ": missing tails");
      std::vector<std::string> tails;
      for (const auto& t : j["tails"]) {
        if (!t.is_string()) throw ValidationError(std::string(what) + ": tails must be strings");
        tails.push_back(t.get<std::string>());
      }
      return Orientation(c.graph, tails);
    }
    return orientation_from_json(j, p.parent_path(), c.graph);
  }
  if (c.fixture) {
    for (const std::string& key : {spec, p.stem().string()}) {
      for (const auto& [k, o] : c.fixture->orientations) {
        if (k == key) return o;
      }
    }
  }
  throw ValidationError(std::string(what) + ": no file '" + spec + "'" +
                        (c.fixture ? " and no orientation of that name in fixture " + c.fixture->name : ""));
}

Orientation default_orientation(const Context& c, const std::string& spec, const char* what) {
  if (spec.empty() && c.fixture && !c.fixture->orientations.empty()) return c.fixture->orientations.front().second;
  return load_orientation(c, spec, what);
}

std::optional<AlphaSpec> load_alpha(const Context& c, const Options& o, const Graph& g) {
  if (!o.alpha.empty()) return alpha_from_json(g, read_json_file(o.alpha));
  if (c.fixture && c.fixture->alpha && c.fixture->graph && *c.fixture->graph == g) return c.fixture->alpha;
  return std::nullopt;
}

OracleCaps load_caps(const Options& o) {
  OracleCaps caps = OracleCaps::from_env();
  if (!o.caps.empty()) caps = OracleCaps::parse(o.caps, caps);
  return caps;
}

FlipMode load_mode(const Context& c, const Options& o, const std::optional<Orientation>& target) {
  FlipMode m = parse_mode(o.mode);
  if (m.kind == FlipModeKind::cycle_restricted) {
    if (!target) throw ValidationError("cycle-restricted mode needs --y as the target");
    m.target = *target;
  }
  (void)c;
  return m;
}

std::string tails_label(const Orientation& o) {
  std::string s;
  for (EdgeId e = 0; e < o.graph().edge_count(); ++e) {
    if (e) s += ',';
    s += o.graph().name(o.tail(e));
  }
  return s;
}

Json tails_json(const Orientation& o) {
  Json t = Json::array();
  for (EdgeId e = 0; e < o.graph().edge_count(); ++e) t.push_back(o.graph().name(o.tail(e)));
  return t;
}

std::string quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') q += '\\';
    q += ch;
  }
  return q + "\"";
}

std::string orientation_dot(const Orientation& o) {
  const Graph& g = o.graph();
  std::ostringstream s;
  s << "digraph orientation {\n";
  for (Vertex v : g.by_name()) {
    s << "  " << quote(g.name(v));
    if (g.is_top(v)) s << " [shape=doublecircle]";
    s << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    s << "  " << quote(g.name(o.tail(e))) << " -> " << quote(g.name(o.head(e))) << " [label=\"" << e << "\"];\n";
  }
  s << "}\n";
  return s.str();
}

// Vertex-flip distance; cyclic inputs are first reduced by contracting rigid components.
struct VertexRun {
  FlipSequence contracted;
  FlipSequence original;
  bool fell_back = false;
};

VertexRun vertex_run(const Orientation& x, const Orientation& y) {
  require_same_graph(x, y);
  VertexRun r;
  MonotoneReport rep;
  if (x.is_acyclic() && y.is_acyclic()) {
    r.contracted = monotone_sequence(x, y, &rep);
    r.original = r.contracted;
  } else {
    RigidContraction rc = contract_rigid(x, y);
    r.contracted = monotone_sequence(rc.x, rc.y, &rep);
    r.original = rc.expand(r.contracted);
  }
  r.fell_back = rep.fell_back;
  return r;
}

// ---- subcommands ----

int cmd_validate(const Context& c, const Options& o, std::string& text) {
  std::string kind = o.kind;
  if (kind == "auto") {
    if (!o.sequence.empty()) {
      kind = "sequence";
    } else if (!o.matching.empty() || (c.fixture && c.fixture->matching && o.x.empty())) {
      kind = "matching";
    } else if (!o.alpha.empty() || (c.fixture && c.fixture->alpha)) {
      kind = "alpha";
    } else {
      kind = "c";
    }
  }
  bool valid = true;
  std::string reason;
  Json j;
  j["kind"] = kind;
  if (kind == "matching") {
    try {
      if (!o.matching.empty()) {
        const fs::path p(o.matching);
        matching_from_json(read_json_file(p), p.parent_path(), c.graph);
      } else {
        if (!c.fixture || !c.fixture->matching || !c.fixture->sides) throw ValidationError("missing --matching");
        validate_matching(Matching{c.fixture->graph, *c.fixture->sides, *c.fixture->matching});
      }
    } catch (const ValidationError& e) {
      valid = false;
      reason = e.what();
    }
  } else if (kind == "alpha") {
    const Orientation x = default_orientation(c, o.x, "x");
    const std::optional<AlphaSpec> a = load_alpha(c, o, x.graph());
    if (!a) throw ValidationError("alpha validation needs --alpha or a fixture with alpha");
    valid = check_alpha(x, *a);
    if (!valid) reason = "x violates alpha";
    if (valid && !o.y.empty()) {
      const Orientation y = load_orientation(c, o.y, "y");
      valid = check_alpha(y, *a);
      if (!valid) reason = "y violates alpha";
    }
  } else if (kind == "c") {
    const Orientation x = default_orientation(c, o.x, "x");
    const Graph& g = x.graph();
    j["acyclic"] = x.is_acyclic();
    if (!g.top()) {
      valid = false;
      reason = "graph has no top";
    } else if (!g.is_connected()) {
      valid = false;
      reason = "graph is not connected";
    } else if (!o.y.empty()) {
      const Orientation y = load_orientation(c, o.y, "y");
      require_same_graph(x, y);
      valid = same_c(x, y);
      if (!valid) reason = "difference of x and y is not balanced";
    }
  } else if (kind == "sequence") {
    const Orientation x = load_orientation(c, o.x, "x");
    const Orientation y = load_orientation(c, o.y, "y");
    if (o.sequence.empty()) throw ValidationError("missing --sequence");
    const FlipSequence f = sequence_from_json(x.graph(), read_json_file(o.sequence));
    const ReplayResult r = replay(x, f, y);
    valid = r.ok;
    j["length"] = f.size();
    j["monotone"] = is_monotone(f);
    if (!valid) reason = "step " + std::to_string(r.failed_step) + ": " + r.message;
  } else {
    throw ValidationError("unknown kind '" + kind + "'");
  }
  Json out;
  out["valid"] = valid;
  for (auto& [k, v] : j.items()) out[k] = v;
  if (!valid) out["reason"] = reason;
  if (o.format == "text") {
    text = std::string(valid ? "valid" : "invalid") + " " + kind + (valid ? "" : ": " + reason) + "\n";
  } else {
    text = dump(out);
  }
  return valid ? 0 : 2;
}

int cmd_distance(const Context& c, const Options& o, std::string& text) {
  const Orientation x = load_orientation(c, o.x, "x");
  const Orientation y = load_orientation(c, o.y, "y");
  const FlipMode mode = load_mode(c, o, y);
  Json j;
  if (mode.kind == FlipModeKind::vertex) {
    const VertexRun r = vertex_run(x, y);
    j["distance"] = r.contracted.size();
    j["mode"] = mode.name();
    j["method"] = r.fell_back ? "meet-route" : "monotone";
  } else {
    const OracleResult r = bfs_distance(x, y, mode, load_caps(o),
                                        o.max_depth >= 0 ? std::optional<long>(o.max_depth) : std::nullopt);
    j["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
    j["mode"] = mode.name();
    j["method"] = "oracle";
    j["explored"] = r.explored;
  }
  if (o.format == "text") {
    text = j["distance"].is_null() ? "unreachable\n" : std::to_string(j["distance"].get<long>()) + "\n";
  } else {
    text = dump(j);
  }
  return 0;
}

std::string sequence_text(const Graph& g, const FlipSequence& f) {
  std::ostringstream s;
  for (const FlipStep& st : f.steps) {
    switch (st.kind) {
    case StepKind::vertex:
      s << "vertex " << g.name(st.vertex) << ' '
        << (st.direction == FlipDirection::source_to_sink ? "source_to_sink" : "sink_to_source") << '\n';
      break;
    case StepKind::cycle:
      s << "cycle";
      for (EdgeId e : st.edges) s << ' ' << e;
      s << '\n';
      break;
    case StepKind::cut:
      s << "cut";
      for (const std::string& n : g.set_to_names(st.interior)) s << ' ' << n;
      s << '\n';
      break;
    }
  }
  return s.str();
}

int cmd_sequence(const Context& c, const Options& o, std::string& text) {
  const Orientation x = load_orientation(c, o.x, "x");
  const Orientation y = load_orientation(c, o.y, "y");
  const VertexRun r = vertex_run(x, y);
  text = o.format == "text" ? sequence_text(x.graph(), r.original) : dump(sequence_to_json(x.graph(), r.original));
  return 0;
}

int cmd_oracle(const Context& c, const Options& o, std::string& text) {
  const Orientation x = load_orientation(c, o.x, "x");
  const Orientation y = load_orientation(c, o.y, "y");
  const FlipMode mode = load_mode(c, o, y);
  const OracleResult r =
      bfs_distance(x, y, mode, load_caps(o), o.max_depth >= 0 ? std::optional<long>(o.max_depth) : std::nullopt);
  Json j;
  j["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
  j["mode"] = mode.name();
  j["explored"] = r.explored;
  j["discovered"] = r.discovered;
  j["depth_limited"] = r.depth_limited;
  j["witness"] = sequence_to_json(x.graph(), r.witness);
  if (o.format == "text") {
    text = (r.distance ? std::to_string(*r.distance) : std::string("unreachable")) + "\n" +
           sequence_text(x.graph(), r.witness);
  } else {
    text = dump(j);
  }
  return 0;
}

int cmd_flipgraph(const Context& c, const Options& o, std::string& text) {
  const Orientation x = default_orientation(c, o.x, "x");
  std::optional<Orientation> target;
  if (!o.y.empty()) target = load_orientation(c, o.y, "y");
  const FlipMode mode = load_mode(c, o, target);
  const FlipGraph fg = explore_flip_graph(x, mode, load_caps(o));
  // Canonical node order: by tails key.
  std::vector<int> order(fg.states.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return fg.states[a].bits() < fg.states[b].bits(); });
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : fg.edges) edges.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  std::sort(edges.begin(), edges.end());
  const Graph& g = x.graph();
  if (o.format == "dot") {
    std::ostringstream s;
    s << "graph flips {\n";
    s << "  label=" << quote("mode " + mode.name() + "; node label = tails by edge id") << ";\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      s << "  n" << i << " [label=" << quote(tails_label(fg.states[order[i]]));
      if (order[i] == 0) s << ", shape=box";
      s << "];\n";
    }
    for (auto [a, b] : edges) s << "  n" << a << " -- n" << b << ";\n";
    s << "}\n";
    text = s.str();
  } else if (o.format == "text") {
    text = "states " + std::to_string(order.size()) + "\nedges " + std::to_string(edges.size()) + "\n";
  } else {
    Json j;
    j["mode"] = mode.name();
    j["state_count"] = order.size();
    j["edge_count"] = edges.size();
    j["start"] = "n" + std::to_string(pos[0]);
    Json states = Json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
      states.push_back(Json{{"id", "n" + std::to_string(i)}, {"tails", tails_json(fg.states[order[i]])}});
    }
    j["states"] = std::move(states);
    Json es = Json::array();
    for (auto [a, b] : edges) es.push_back(Json::array({"n" + std::to_string(a), "n" + std::to_string(b)}));
    j["edges"] = std::move(es);
    (void)g;
    text = dump(j);
  }
  return 0;
}

int cmd_lattice(const Context& c, const Options& o, std::string& text) {
  Orientation x = default_orientation(c, o.x, "x");
  if (!x.is_acyclic()) x = contract_rigid(x, x).x;
  require_c_instance(x);
  const CLattice lat = enumerate_lattice(x, o.cap);
  const Graph& g = x.graph();
  std::vector<Vertex> coords;
  for (Vertex v : g.by_name()) {
    if (!g.is_top(v)) coords.push_back(v);
  }
  auto zlabel = [&](const ZVector& z) {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(z.counts[coords[i]]);
    return s + ")";
  };
  auto rank = [&](const ZVector& z) {
    long r = 0;
    for (Vertex v : coords) r += z.counts[v];
    return r;
  };
  std::string header;
  for (Vertex v : coords) header += (header.empty() ? "" : ",") + g.name(v);
  if (o.format == "dot") {
    std::ostringstream s;
    s << "digraph lattice {\n  rankdir=BT;\n  label=" << quote("z over (" + header + ")") << ";\n";
    std::map<long, std::vector<int>> by_rank;
    for (std::size_t i = 0; i < lat.elements.size(); ++i) by_rank[rank(lat.z[i])].push_back(static_cast<int>(i));
    for (const auto& [r, ids] : by_rank) {
      s << "  { rank=same;";
      for (int i : ids) s << " n" << i << " [label=" << quote(zlabel(lat.z[i])) << "];";
      s << " }\n";
    }
    for (auto [a, b] : lat.covers) s << "  n" << a << " -> n" << b << ";\n";
    s << "}\n";
    text = s.str();
  } else if (o.format == "text") {
    std::ostringstream s;
    s << "id rank z(" << header << ")\n";
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
      s << i << ' ' << rank(lat.z[i]) << ' ' << zlabel(lat.z[i]) << '\n';
    }
    s << "covers " << lat.covers.size() << '\n';
    text = s.str();
  } else {
    Json j;
    j["vertices"] = Json::array();
    for (Vertex v : coords) j["vertices"].push_back(g.name(v));
    j["element_count"] = lat.elements.size();
    j["cover_count"] = lat.covers.size();
    Json es = Json::array();
    for (std::size_t i = 0; i < lat.elements.size(); ++i) {
      Json z = Json::array();
      for (Vertex v : coords) z.push_back(lat.z[i].counts[v]);
      es.push_back(Json{{"id", i}, {"rank", rank(lat.z[i])}, {"z", z}, {"tails", tails_json(lat.elements[i])}});
    }
    j["elements"] = std::move(es);
    Json cs = Json::array();
    for (auto [a, b] : lat.covers) cs.push_back(Json::array({a, b}));
    j["covers"] = std::move(cs);
    text = dump(j);
  }
  return 0;
}

ElementSet load_basis(const Context& c, const std::string& spec, const char* what) {
  if (spec.empty()) throw ValidationError(std::string("missing --") + what);
  const fs::path p(spec);
  if (fs::is_regular_file(p)) {
    Json j = read_json_file(p);
    if (j.is_object() && j.contains("elements")) j = j["elements"];
    if (!j.is_array()) throw ValidationError(std::string(what) + ": expected an array of elements");
    ElementSet s;
    for (const auto& e : j) {
      if (!e.is_string()) throw ValidationError(std::string(what) + ": elements must be strings");
      s.insert(e.get<std::string>());
    }
    return s;
  }
  if (c.fixture) {
    for (std::string key : {spec, p.stem().string()}) {
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& [k, b] : c.fixture->bases) {
          if (k == key) return b;
        }
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::toupper(ch); });
      }
    }
  }
  throw ValidationError(std::string(what) + ": no file '" + spec + "'");
}

Json pairs_json(const std::vector<ElementPair>& ps) {
  Json j = Json::array();
  for (const auto& [a, b] : ps) j.push_back(Json::array({a, b}));
  return j;
}

int cmd_adjacent(const Context& c, const Options& o, std::string& text) {
  PartitionMatroid mp, mm;
  ElementSet a, b;
  const bool orientations = !o.x.empty() || !o.y.empty();
  if (orientations) {
    const Orientation x = load_orientation(c, o.x, "x");
    const Orientation y = load_orientation(c, o.y, "y");
    require_same_graph(x, y);
    const AlphaSpec alpha = load_alpha(c, o, x.graph()).value_or(AlphaSpec::of(x));
    std::tie(mp, mm) = alpha_matroids(x.graph(), alpha);
    a = orientation_elements(x);
    b = orientation_elements(y);
  } else {
    if (!o.matroids.empty()) {
      const Json j = read_json_file(o.matroids);
      if (!j.is_object() || !j.contains("plus") || !j.contains("minus")) {
        throw ValidationError("matroids file needs \"plus\" and \"minus\"");
      }
      mp = matroid_from_json(j["plus"]);
      mm = matroid_from_json(j["minus"]);
    } else if (c.fixture && c.fixture->matroids) {
      std::tie(mp, mm) = *c.fixture->matroids;
    } else {
      throw ValidationError("missing --matroids");
    }
    a = load_basis(c, o.a, "a");
    b = load_basis(c, o.b, "b");
  }
  const AdjacencyResult r = polytope_adjacent(a, b, mp, mm);
  Json j;
  j["adjacent"] = r.adjacent;
  if (r.p_plus) j["p_plus"] = pairs_json(*r.p_plus);
  if (r.p_minus) j["p_minus"] = pairs_json(*r.p_minus);
  if (!r.adjacent) j["reason"] = r.reason;
  text = o.format == "text" ? std::string(r.adjacent ? "adjacent\n" : "not adjacent: " + r.reason + "\n") : dump(j);
  return 0;
}

int cmd_reduce(const Context& c, const Options& o, std::string& text) {
  ReductionOutput r;
  if (o.from == "hamiltonicity") {
    r = reduce_hamiltonicity(default_orientation(c, o.x, "x"));
  } else if (o.from == "two-ham") {
    r = reduce_two_ham(default_orientation(c, o.x, "x"));
  } else if (o.from == "jump-number") {
    FinitePoset p;
    if (!o.poset.empty()) {
      p = poset_from_json(read_json_file(o.poset));
    } else if (c.fixture && c.fixture->poset) {
      p = *c.fixture->poset;
    } else {
      throw ValidationError("jump-number reduction needs --poset or a poset fixture");
    }
    r = reduce_jump_number(p);
  } else {
    throw ValidationError("unknown reduction '" + o.from + "'");
  }
  if (o.format == "dot") {
    text = orientation_dot(r.x);
    return 0;
  }
  const Graph& g = *r.graph;
  Json j;
  j["kind"] = r.kind;
  j["graph"] = graph_to_json(g);
  j["x"] = Json{{"tails", tails_json(r.x)}};
  j["y"] = Json{{"tails", tails_json(r.y)}};
  if (r.alpha) j["alpha"] = alpha_to_json(g, *r.alpha)["alpha"];
  if (r.sides) {
    j["v1"] = g.set_to_names(r.sides->left);
    j["v2"] = g.set_to_names(r.sides->right);
  }
  if (r.x_matching) j["x_matched_edge_ids"] = r.x_matching->ids();
  if (r.y_matching) j["y_matched_edge_ids"] = r.y_matching->ids();
  Json prov = Json::object();
  for (const auto& [k, v] : r.provenance) prov[k] = v;
  j["provenance"] = std::move(prov);
  text = dump(j);
  return 0;
}

long to_long(const std::string& s, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ValidationError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

int cmd_gen(const Context& c, const Options& o, std::string& text) {
  if (o.list) {
    std::string s;
    for (const std::string& n : fixture_names()) s += n + "\n";
    text = o.format == "json" ? dump(Json(fixture_names())) : s;
    return 0;
  }
  if (c.fixture) {
    if (o.format == "dot") {
      if (c.fixture->orientations.empty()) throw ValidationError("fixture has no orientation to draw");
      text = orientation_dot(c.fixture->orientations.front().second);
    } else {
      text = dump(fixture_to_json(*c.fixture));
    }
    return 0;
  }
  if (!o.grid.empty()) {
    const auto xpos = o.grid.find('x');
    if (xpos == std::string::npos) throw ValidationError("grid must look like RxC");
    const Orientation g = grid_instance(static_cast<int>(to_long(o.grid.substr(0, xpos), "grid rows")),
                                        static_cast<int>(to_long(o.grid.substr(xpos + 1), "grid columns")));
    text = o.format == "dot" ? orientation_dot(g) : dump(orientation_to_json(g));
    return 0;
  }
  if (!o.random_poset.empty()) {
    if (o.random_poset.size() != 3) throw ValidationError("--random-poset takes n p seed");
    const long n = to_long(o.random_poset[0], "poset size");
    if (n < 0 || n > 64) throw ValidationError("poset size must be in 0..64");
    double p = 0;
    try {
      std::size_t used = 0;
      p = std::stod(o.random_poset[1], &used);
      if (used != o.random_poset[1].size()) throw std::invalid_argument("p");
    } catch (const std::exception&) {
      throw ValidationError("bad probability '" + o.random_poset[1] + "'");
    }
    if (!(p >= 0 && p <= 1)) throw ValidationError("probability must be in [0,1]");
    const auto seed = static_cast<std::uint64_t>(to_long(o.random_poset[2], "seed"));
    const FinitePoset poset = o.height2 ? random_height2_poset(static_cast<int>(n), p, seed)
                                        : random_poset(static_cast<int>(n), p, seed);
    text = dump(poset_to_json(poset));
    return 0;
  }
  if (!o.random_c.empty()) {
    if (o.random_c.size() != 3) throw ValidationError("--random-c takes n extra seed");
    const long n = to_long(o.random_c[0], "vertex count");
    const long extra = to_long(o.random_c[1], "extra edges");
    if (n < 1 || n > 10000 || extra < 0 || extra > 100000) throw ValidationError("random-c sizes out of range");
    std::mt19937_64 rng(static_cast<std::uint64_t>(to_long(o.random_c[2], "seed")));
    const Orientation x = random_c_instance(static_cast<int>(n), static_cast<int>(extra), rng);
    text = o.format == "dot" ? orientation_dot(x) : dump(orientation_to_json(x));
    return 0;
  }
  throw ValidationError("gen needs --fixture, --grid, --random-poset, --random-c or --list");
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ValidationError("cannot write '" + o.out + "'");
  f << text;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Flip distances between graph orientations", "flipdist"};
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
    std::vector<std::string> formats;
  };
  const std::vector<Sub> subs = {
      {"validate", "check alpha-, c-, matching or sequence validity", {"json", "text"}},
      {"distance", "flip distance (vertex mode: polynomial algorithm; others: oracle)", {"json", "text"}},
      {"sequence", "monotone vertex-flip sequence from x to y", {"json", "text"}},
      {"flipgraph", "flip graph reachable from x under a mode", {"json", "dot", "text"}},
      {"lattice", "distributive lattice of c-orientations with z-vectors", {"json", "dot", "text"}},
      {"adjacent", "adjacency on the common base polytope", {"json", "text"}},
      {"reduce", "hardness-reduction instance generator", {"json", "dot"}},
      {"oracle", "breadth-first flip distance with witness", {"json", "text"}},
      {"gen", "fixtures and random instances", {"json", "dot", "text"}},
  };
  std::map<std::string, CLI::App*> cmd;
  for (const Sub& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->add_option("--fixture", o.fixture, "built-in fixture name");
    sc->add_option("--graph", o.graph, "graph JSON file for orientations given without one");
    sc->add_option("--out", o.out, "write output to this file");
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember(s.formats));
    cmd[s.name] = sc;
  }
  for (const char* n : {"validate", "distance", "sequence", "flipgraph", "lattice", "adjacent", "reduce", "oracle"}) {
    cmd[n]->add_option("--x", o.x, "orientation file or fixture orientation name");
  }
  for (const char* n : {"validate", "distance", "sequence", "flipgraph", "adjacent", "oracle"}) {
    cmd[n]->add_option("--y", o.y, "orientation file or fixture orientation name");
  }
  for (const char* n : {"distance", "flipgraph", "oracle"}) {
    cmd[n]->add_option("--mode", o.mode, "cycle, cycle-restricted, vertex or cut-<k>");
    cmd[n]->add_option("--caps", o.caps, "search caps states=N,cycles=M");
  }
  for (const char* n : {"distance", "oracle"}) cmd[n]->add_option("--max-depth", o.max_depth, "stop BFS at this depth");
  for (const char* n : {"validate", "adjacent"}) cmd[n]->add_option("--alpha", o.alpha, "alpha JSON file");
  cmd["validate"]->add_option("--kind", o.kind, "auto, alpha, matching, c or sequence")
      ->check(CLI::IsMember({"auto", "alpha", "matching", "c", "sequence"}));
  cmd["validate"]->add_option("--matching", o.matching, "matching JSON file");
  cmd["validate"]->add_option("--sequence", o.sequence, "flip sequence JSON file to replay from x to y");
  cmd["lattice"]->add_option("--cap", o.cap, "maximum number of lattice elements");
  cmd["adjacent"]->add_option("--matroids", o.matroids, "JSON with \"plus\" and \"minus\" matroids");
  cmd["adjacent"]->add_option("--a", o.a, "first basis (file or fixture basis name)");
  cmd["adjacent"]->add_option("--b", o.b, "second basis (file or fixture basis name)");
  cmd["reduce"]->add_option("--from", o.from, "hamiltonicity, two-ham or jump-number")
      ->required()
      ->check(CLI::IsMember({"hamiltonicity", "two-ham", "jump-number"}));
  cmd["reduce"]->add_option("--poset", o.poset, "poset JSON file");
  cmd["gen"]->add_option("--grid", o.grid, "RxC grid c-instance");
  cmd["gen"]->add_option("--random-poset", o.random_poset, "n p seed")->expected(3);
  cmd["gen"]->add_flag("--height2", o.height2, "random poset of height at most two");
  cmd["gen"]->add_option("--random-c", o.random_c, "n extra seed")->expected(3);
  cmd["gen"]->add_flag("--list", o.list, "list fixture names");

  std::vector<std::string> argv_store{"flipdist"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    const Context c = make_context(o);
    std::string text;
    int code = 0;
    if (cmd["validate"]->parsed()) code = cmd_validate(c, o, text);
    else if (cmd["distance"]->parsed()) code = cmd_distance(c, o, text);
    else if (cmd["sequence"]->parsed()) code = cmd_sequence(c, o, text);
    else if (cmd["flipgraph"]->parsed()) code = cmd_flipgraph(c, o, text);
    else if (cmd["lattice"]->parsed()) code = cmd_lattice(c, o, text);
    else if (cmd["adjacent"]->parsed()) code = cmd_adjacent(c, o, text);
    else if (cmd["reduce"]->parsed()) code = cmd_reduce(c, o, text);
    else if (cmd["oracle"]->parsed()) code = cmd_oracle(c, o, text);
    else code = cmd_gen(c, o, text);
    write_output(o, text, out);
    return code;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace flipdist::cli
