#include "flipdist/fixtures.hpp"

#include "flipdist/error.hpp"

#include <algorithm>

namespace flipdist {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

GraphPtr make_graph(std::vector<std::string> vertices, const Pairs& edges,
                    std::optional<std::string> top = std::nullopt) {
  return std::make_shared<const Graph>(Graph(std::move(vertices), edges, std::move(top)));
}

// Graph whose edges are the given arcs, plus the orientation along them.
std::pair<GraphPtr, Orientation> digraph(std::vector<std::string> vertices, const Pairs& arcs,
                                         std::optional<std::string> top = std::nullopt) {
  GraphPtr g = make_graph(std::move(vertices), arcs, std::move(top));
  std::vector<std::string> tails;
  for (const auto& a : arcs) tails.push_back(a.first);
  return {g, Orientation(g, tails)};
}

const Pairs kFig2Arcs = {{"a", "b"}, {"b", "d"}, {"c", "a"}, {"g", "d"}, {"j", "f"}, {"d", "h"}, {"h", "k"},
                         {"e", "c"}, {"c", "f"}, {"f", "g"}, {"g", "k"}, {"k", "j"}, {"j", "e"}};

Fixture fig2() {
  Fixture f;
  f.name = "fig2";
  f.description = "alpha-orientations of a 10-vertex bipartite graph differing on one 6-cycle";
  auto [g, left] = digraph({"a", "b", "c", "d", "e", "f", "g", "h", "j", "k"}, kFig2Arcs);
  f.graph = g;
  // The 6-cycle e->c->f->g->k->j->e runs the other way on the right.
  Orientation right = left;
  for (EdgeId e : {7, 8, 9, 10, 11, 12}) right.reverse_edge(e);
  f.orientations = {{"left", left}, {"right", right}};
  f.alpha = AlphaSpec::from_names(*g, {{"a", 1}, {"b", 1}, {"c", 2}, {"d", 1}, {"e", 1},
                                       {"f", 1}, {"g", 2}, {"h", 1}, {"j", 2}, {"k", 1}});
  f.sides = Bipartition{g->names_to_set({"a", "d", "e", "f", "k"}), g->names_to_set({"b", "c", "g", "h", "j"})};
  return f;
}

Fixture fig4() {
  Fixture f = fig2();
  f.name = "fig4";
  f.description = "perfect matching {ab, ec, fg, dh, kj} of the fig2 graph and its alpha-orientation";
  f.matching = EdgeSet({0, 5, 7, 9, 11});
  f.orientations.resize(1);
  return f;
}

Fixture fig6() {
  Fixture f = fig2();
  f.name = "fig6";
  f.description = "two adjacent common bases of the vertex-side partition matroids on the fig2 graph";
  f.orientations.clear();
  f.alpha.reset();
  // Edge labels: 1..8 as drawn, the rest by their ends.
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> labelled = {
      {"1", {"a", "c"}}, {"2", {"a", "b"}}, {"3", {"d", "b"}}, {"4", {"d", "g"}}, {"5", {"f", "g"}},
      {"6", {"f", "c"}}, {"7", {"e", "j"}}, {"8", {"k", "h"}}, {"ce", {"e", "c"}}, {"fj", {"f", "j"}},
      {"gk", {"k", "g"}}, {"dh", {"d", "h"}}, {"jk", {"k", "j"}}};
  PartitionMatroid plus, minus;
  for (const auto& [label, ends] : labelled) {
    plus.ground.push_back(label);
    minus.ground.push_back(label);
    plus.class_of[label] = "v1:" + ends.first;
    minus.class_of[label] = "v2:" + ends.second;
    plus.capacity["v1:" + ends.first] = 1;
    minus.capacity["v2:" + ends.second] = 1;
  }
  f.matroids = std::make_pair(plus, minus);
  f.bases = {{"A", {"1", "3", "5", "7", "8"}}, {"B", {"2", "4", "6", "7", "8"}}};
  return f;
}

Fixture fig3() {
  Fixture f;
  f.name = "fig3";
  f.description = "alpha-orientation where flipping three cycles beats flipping the four differing faces";
  std::vector<std::string> names;
  for (char c = 'a'; c <= 't'; ++c) names.emplace_back(1, c);
  const Pairs arcs = {{"a", "b"}, {"e", "f"}, {"i", "j"}, {"m", "n"}, {"q", "r"},
                      {"b", "c"}, {"c", "e"}, {"e", "d"}, {"d", "b"},
                      {"f", "g"}, {"g", "i"}, {"i", "h"}, {"h", "f"},
                      {"j", "k"}, {"k", "m"}, {"m", "l"}, {"l", "j"},
                      {"n", "o"}, {"o", "q"}, {"q", "p"}, {"p", "n"},
                      {"r", "s"}, {"s", "a"}, {"a", "t"}, {"t", "r"}};
  auto [g, x] = digraph(names, arcs);
  f.graph = g;
  Orientation y = x;
  for (EdgeId e = 5; e <= 20; ++e) y.reverse_edge(e);
  f.orientations = {{"x", x}, {"y", y}};
  f.alpha = AlphaSpec::of(x);
  return f;
}

// Edge order: b-top, d-b, e-b, f-b, e-d, e-f, e-top, d-top, f-top.
Fixture fig7() {
  Fixture f;
  f.name = "fig7";
  f.description = "c-orientations of a 5-vertex graph forming a 6-element distributive lattice";
  f.graph = make_graph({"b", "d", "e", "f", "top"},
                       {{"b", "top"}, {"d", "b"}, {"e", "b"}, {"f", "b"}, {"e", "d"},
                        {"e", "f"}, {"e", "top"}, {"d", "top"}, {"f", "top"}},
                       "top");
  auto o = [&](std::vector<std::string> tails) { return Orientation(f.graph, tails); };
  f.orientations = {
      {"bottom", o({"b", "d", "e", "f", "e", "e", "e", "d", "f"})},
      {"z0010", o({"b", "d", "b", "f", "d", "f", "top", "d", "f"})},
      {"z0011", o({"b", "d", "b", "b", "d", "e", "top", "d", "top"})},
      {"z0110", o({"b", "b", "b", "f", "e", "f", "top", "top", "f"})},
      {"z0111", o({"b", "b", "b", "b", "e", "e", "top", "top", "top"})},
      {"top", o({"top", "d", "e", "f", "e", "e", "top", "top", "top"})},
  };
  return f;
}

Fixture single_digraph(std::string name, std::string description, std::vector<std::string> vertices,
                       const Pairs& arcs) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  auto [g, d] = digraph(std::move(vertices), arcs);
  f.graph = g;
  f.orientations = {{"d", d}};
  return f;
}

Fixture circulant(const std::string& name, int n) {
  std::vector<std::string> vertices;
  Pairs arcs;
  for (int i = 0; i < n; ++i) vertices.push_back(std::to_string(i));
  for (int step : {1, 2}) {
    for (int i = 0; i < n; ++i) arcs.emplace_back(std::to_string(i), std::to_string((i + step) % n));
  }
  return single_digraph(name, "circulant digraph on Z" + std::to_string(n) + " with arcs i->i+1 and i->i+2",
                        vertices, arcs);
}

Fixture poset_fixture(std::string name, std::string description, FinitePoset p) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.poset = std::move(p);
  return f;
}

} // namespace

const Orientation& Fixture::orientation(const std::string& key) const {
  for (const auto& [k, o] : orientations) {
    if (k == key) return o;
  }
  throw ValidationError("fixture '" + name + "' has no orientation '" + key + "'");
}

const ElementSet& Fixture::basis(const std::string& key) const {
  for (const auto& [k, b] : bases) {
    if (k == key) return b;
  }
  throw ValidationError("fixture '" + name + "' has no basis '" + key + "'");
}

std::vector<std::string> fixture_names() {
  return {"antichain3", "chain2", "fig2", "fig3", "fig4", "fig6", "fig7", "k4ham", "prism", "z5circ", "z6circ"};
}

Fixture load_fixture(const std::string& name) {
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig6") return fig6();
  if (name == "fig7") return fig7();
  if (name == "k4ham") {
    return single_digraph("k4ham", "K4 oriented 1->2->3->4->1 plus 1->3 and 2->4", {"1", "2", "3", "4"},
                          {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"1", "3"}, {"2", "4"}});
  }
  if (name == "prism") {
    return single_digraph("prism", "triangular prism: two directed triangles, rungs a_i->b_i",
                          {"a1", "a2", "a3", "b1", "b2", "b3"},
                          {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b1"},
                           {"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  }
  if (name == "z5circ") return circulant("z5circ", 5);
  if (name == "z6circ") return circulant("z6circ", 6);
  if (name == "chain2") return poset_fixture("chain2", "two-element chain a<b", FinitePoset({"a", "b"}, {{0, 1}}));
  if (name == "antichain3") {
    return poset_fixture("antichain3", "three pairwise incomparable elements", FinitePoset({"a", "b", "c"}, {}));
  }
  throw ValidationError("unknown fixture '" + name + "'");
}

Json fixture_to_json(const Fixture& f) {
  Json j;
  j["fixture"] = f.name;
  j["description"] = f.description;
  if (f.graph) j["graph"] = graph_to_json(*f.graph);
  if (!f.orientations.empty()) {
    Json os = Json::object();
    for (const auto& [k, o] : f.orientations) {
      Json tails = Json::array();
      for (EdgeId e = 0; e < o.graph().edge_count(); ++e) tails.push_back(o.graph().name(o.tail(e)));
      os[k] = Json{{"tails", tails}};
    }
    j["orientations"] = std::move(os);
  }
  if (f.alpha) j["alpha"] = alpha_to_json(*f.graph, *f.alpha)["alpha"];
  if (f.sides) {
    j["v1"] = f.graph->set_to_names(f.sides->left);
    j["v2"] = f.graph->set_to_names(f.sides->right);
  }
  if (f.matching) j["matched_edge_ids"] = f.matching->ids();
  if (f.poset) j["poset"] = poset_to_json(*f.poset);
  if (f.matroids) {
    j["matroids"] = Json{{"plus", matroid_to_json(f.matroids->first)}, {"minus", matroid_to_json(f.matroids->second)}};
  }
  if (!f.bases.empty()) {
    Json bs = Json::object();
    for (const auto& [k, b] : f.bases) bs[k] = Json(std::vector<std::string>(b.begin(), b.end()));
    j["bases"] = std::move(bs);
  }
  return j;
}

} // namespace flipdist
