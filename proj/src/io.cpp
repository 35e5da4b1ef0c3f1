#include "flipdist/io.hpp"

#include "flipdist/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace flipdist {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<long>();
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

GraphPtr resolve_graph(const Json& j, const std::filesystem::path& base_dir, const GraphPtr& known) {
  Graph g;
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    g = parse_graph(read_file(p));
  } else {
    g = graph_from_json(j);
  }
  if (known && *known == g) return known;
  return std::make_shared<const Graph>(std::move(g));
}

} // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::filesystem::path& path) { return parse_json(read_file(path)); }

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.names();
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"id", e}, {"ends", {g.name(g.edge(e).u), g.name(g.edge(e).v)}}});
  }
  j["edges"] = std::move(edges);
  if (g.top()) j["top"] = g.name(*g.top());
  return j;
}

Graph graph_from_json(const Json& j) {
  std::vector<std::string> vertices = string_list(field(j, "vertices"), "vertices");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw ValidationError("edges must be an array");
  std::vector<std::pair<std::string, std::string>> ends(edges.size());
  std::vector<char> seen(edges.size(), 0);
  for (const auto& e : edges) {
    const long id = as_integer(field(e, "id"), "edge id");
    if (id < 0 || id >= static_cast<long>(edges.size())) {
      throw ValidationError("edge id " + std::to_string(id) + " out of range 0.." + std::to_string(edges.size() - 1));
    }
    if (seen[id]) throw ValidationError("duplicate edge id " + std::to_string(id));
    seen[id] = 1;
    const Json& pair = field(e, "ends");
    if (!pair.is_array() || pair.size() != 2) throw ValidationError("edge ends must be a pair");
    ends[id] = {as_string(pair[0], "edge end"), as_string(pair[1], "edge end")};
    if (ends[id].first == ends[id].second) {
      throw ValidationError("edge " + std::to_string(id) + " is a self-loop at '" + ends[id].first + "'");
    }
  }
  std::optional<std::string> top;
  if (j.contains("top") && !j["top"].is_null()) top = as_string(j["top"], "top");
  return Graph(std::move(vertices), ends, top);
}

Graph parse_graph(const std::string& text) { return graph_from_json(parse_json(text)); }

Json orientation_to_json(const Orientation& o) {
  Json j;
  j["graph"] = graph_to_json(o.graph());
  Json tails = Json::array();
  for (EdgeId e = 0; e < o.graph().edge_count(); ++e) tails.push_back(o.graph().name(o.tail(e)));
  j["tails"] = std::move(tails);
  return j;
}

Orientation orientation_from_json(const Json& j, const std::filesystem::path& base_dir, const GraphPtr& known) {
  GraphPtr g = resolve_graph(field(j, "graph"), base_dir, known);
  std::vector<std::string> tails = string_list(field(j, "tails"), "tails");
  return Orientation(g, tails);
}

Json alpha_to_json(const Graph& g, const AlphaSpec& a) {
  Json values = Json::object();
  for (Vertex v = 0; v < g.vertex_count(); ++v) values[g.name(v)] = a.alpha.at(v);
  return Json{{"alpha", values}};
}

AlphaSpec alpha_from_json(const Graph& g, const Json& j) {
  const Json& values = j.contains("alpha") ? j["alpha"] : j;
  if (!values.is_object()) throw ValidationError("alpha must be an object");
  std::map<std::string, int> m;
  for (const auto& [k, v] : values.items()) m[k] = static_cast<int>(as_integer(v, "alpha value"));
  return AlphaSpec::from_names(g, m);
}

Json matching_to_json(const Matching& m) {
  Json j;
  j["graph"] = graph_to_json(*m.graph);
  j["v1"] = m.graph->set_to_names(m.sides.left);
  j["v2"] = m.graph->set_to_names(m.sides.right);
  j["matched_edge_ids"] = m.matched.ids();
  return j;
}

Matching matching_from_json(const Json& j, const std::filesystem::path& base_dir, const GraphPtr& known) {
  Matching m;
  m.graph = resolve_graph(field(j, "graph"), base_dir, known);
  m.sides.left = m.graph->names_to_set(string_list(field(j, "v1"), "v1"));
  m.sides.right = m.graph->names_to_set(string_list(field(j, "v2"), "v2"));
  const Json& ids = field(j, "matched_edge_ids");
  if (!ids.is_array()) throw ValidationError("matched_edge_ids must be an array");
  std::vector<EdgeId> matched;
  for (const auto& x : ids) {
    const long id = as_integer(x, "matched edge id");
    if (id < 0 || id >= m.graph->edge_count()) throw ValidationError("matched edge id out of range");
    matched.push_back(static_cast<EdgeId>(id));
  }
  m.matched = EdgeSet(std::move(matched));
  validate_matching(m);
  return m;
}

Json poset_to_json(const FinitePoset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back({p.elements()[a], p.elements()[b]});
  return Json{{"elements", p.elements()}, {"covers", covers}};
}

FinitePoset poset_from_json(const Json& j) {
  std::vector<std::string> elements = string_list(field(j, "elements"), "elements");
  const Json& covers = field(j, "covers");
  if (!covers.is_array()) throw ValidationError("covers must be an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2) throw ValidationError("each cover must be a pair");
    pairs.emplace_back(as_string(c[0], "cover element"), as_string(c[1], "cover element"));
  }
  return FinitePoset::from_names(std::move(elements), pairs);
}

Json matroid_to_json(const PartitionMatroid& m) {
  Json classes = Json::object();
  for (const auto& x : m.ground) classes[x] = m.class_of.at(x);
  Json caps = Json::object();
  for (const auto& [c, k] : m.capacity) caps[c] = k;
  return Json{{"ground", m.ground}, {"classes", classes}, {"capacities", caps}};
}

PartitionMatroid matroid_from_json(const Json& j) {
  PartitionMatroid m;
  m.ground = string_list(field(j, "ground"), "ground");
  const Json& classes = field(j, "classes");
  const Json& caps = field(j, "capacities");
  if (!classes.is_object() || !caps.is_object()) throw ValidationError("classes and capacities must be objects");
  for (const auto& [x, c] : classes.items()) m.class_of[x] = as_string(c, "class");
  for (const auto& [c, k] : caps.items()) m.capacity[c] = static_cast<int>(as_integer(k, "capacity"));
  m.validate();
  return m;
}

Json vertex_set_to_json(const Graph& g, const VertexSet& s) { return g.set_to_names(s); }

Json edge_set_to_json(const EdgeSet& s) { return s.ids(); }

Json sequence_to_json(const Graph& g, const FlipSequence& f) {
  Json steps = Json::array();
  for (const FlipStep& s : f.steps) {
    Json j;
    switch (s.kind) {
    case StepKind::vertex:
      j["kind"] = "vertex";
      j["vertex"] = g.name(s.vertex);
      j["direction"] = s.direction == FlipDirection::source_to_sink ? "source_to_sink" : "sink_to_source";
      break;
    case StepKind::cycle:
      j["kind"] = "cycle";
      j["edges"] = s.edges.ids();
      break;
    case StepKind::cut:
      j["kind"] = "cut";
      j["interior"] = g.set_to_names(s.interior);
      break;
    }
    steps.push_back(std::move(j));
  }
  return Json{{"steps", steps}};
}

FlipSequence sequence_from_json(const Graph& g, const Json& j) {
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) throw ValidationError("steps must be an array");
  FlipSequence f;
  for (const auto& s : steps) {
    const std::string kind = as_string(field(s, "kind"), "kind");
    if (kind == "vertex") {
      const std::string dir = as_string(field(s, "direction"), "direction");
      FlipDirection d;
      if (dir == "source_to_sink") {
        d = FlipDirection::source_to_sink;
      } else if (dir == "sink_to_source") {
        d = FlipDirection::sink_to_source;
      } else {
        throw ValidationError("unknown direction '" + dir + "'");
      }
      f.steps.push_back(FlipStep::at_vertex(g.index(as_string(field(s, "vertex"), "vertex")), d));
    } else if (kind == "cycle") {
      const Json& edges = field(s, "edges");
      if (!edges.is_array()) throw ValidationError("cycle edges must be an array");
      std::vector<EdgeId> ids;
      for (const auto& e : edges) {
        const long id = as_integer(e, "edge id");
        if (id < 0 || id >= g.edge_count()) throw ValidationError("cycle edge id out of range");
        ids.push_back(static_cast<EdgeId>(id));
      }
      f.steps.push_back(FlipStep::cycle(EdgeSet(std::move(ids))));
    } else if (kind == "cut") {
      f.steps.push_back(FlipStep::cut(g.names_to_set(string_list(field(s, "interior"), "interior"))));
    } else {
      throw ValidationError("unknown step kind '" + kind + "'");
    }
  }
  return f;
}

} // namespace flipdist
