#include "flipdist/orientations.hpp"

#include "flipdist/error.hpp"
#include "flipdist/flip_sequence.hpp"

#include <algorithm>
#include <unordered_map>

namespace flipdist {

AlphaSpec AlphaSpec::from_names(const Graph& g, const std::map<std::string, int>& values) {
  AlphaSpec a;
  a.alpha.assign(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& [name, value] : values) {
    Vertex v = g.index(name);
    if (value < 0) throw ValidationError("alpha of '" + name + "' is negative");
    a.alpha[v] = value;
    seen[v] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw ValidationError("alpha missing vertex '" + g.name(v) + "'");
  }
  return a;
}

AlphaSpec AlphaSpec::of(const Orientation& o) {
  AlphaSpec a;
  a.alpha.resize(o.graph().vertex_count());
  for (Vertex v = 0; v < o.graph().vertex_count(); ++v) a.alpha[v] = o.out_degree(v);
  return a;
}

bool check_alpha(const Orientation& o, const AlphaSpec& a) {
  const Graph& g = o.graph();
  if (static_cast<int>(a.alpha.size()) != g.vertex_count()) {
    throw ValidationError("alpha does not cover every vertex");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (o.out_degree(v) != a.alpha[v]) return false;
  }
  return true;
}

void validate_bipartition(const Graph& g, const Bipartition& sides) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex v : sides.left) side.at(v) = 0;
  for (Vertex v : sides.right) {
    if (side.at(v) != -1) throw ValidationError("vertex '" + g.name(v) + "' is on both sides");
    side[v] = 1;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == -1) throw ValidationError("vertex '" + g.name(v) + "' is on no side");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (side[g.edge(e).u] == side[g.edge(e).v]) {
      throw ValidationError("edge " + std::to_string(e) + " does not cross the bipartition");
    }
  }
}

void validate_matching(const Matching& m) {
  const Graph& g = *m.graph;
  validate_bipartition(g, m.sides);
  std::vector<int> covered(g.vertex_count(), 0);
  for (EdgeId e : m.matched) {
    if (e >= g.edge_count()) throw ValidationError("matched edge id out of range");
    ++covered[g.edge(e).u];
    ++covered[g.edge(e).v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (covered[v] == 0) throw ValidationError("vertex '" + g.name(v) + "' is not matched");
    if (covered[v] > 1) throw ValidationError("vertex '" + g.name(v) + "' is matched twice");
  }
}

AlphaSpec matching_alpha(const Graph& g, const Bipartition& sides) {
  AlphaSpec a;
  a.alpha.assign(g.vertex_count(), 0);
  for (Vertex v : sides.left) a.alpha[v] = 1;
  for (Vertex v : sides.right) a.alpha[v] = g.degree(v) - 1;
  return a;
}

AlphaOrientation matching_to_orientation(const Matching& m) {
  validate_matching(m);
  const Graph& g = *m.graph;
  std::vector<Vertex> tails(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Vertex left_end = contains(m.sides.left, ed.u) ? ed.u : ed.v;
    tails[e] = m.matched.contains(e) ? left_end : g.other_end(e, left_end);
  }
  return {matching_alpha(g, m.sides), Orientation(m.graph, tails)};
}

Matching orientation_to_matching(const Orientation& o, const Bipartition& sides) {
  const Graph& g = o.graph();
  validate_bipartition(g, sides);
  if (!check_alpha(o, matching_alpha(g, sides))) {
    throw ValidationError("orientation is not an alpha-orientation of the matching type");
  }
  std::vector<EdgeId> matched;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (contains(sides.left, o.tail(e))) matched.push_back(e);
  }
  Matching m{o.graph_ptr(), sides, EdgeSet(std::move(matched))};
  validate_matching(m);
  return m;
}

Orientation flip_cycle(const Orientation& o, const EdgeSet& cycle) {
  Orientation out = o;
  std::string why;
  if (!apply_step(out, FlipStep::cycle(cycle), &why)) throw ValidationError(why);
  return out;
}

std::vector<EdgeSet> difference_cycles(const Orientation& x, const Orientation& y) {
  require_same_graph(x, y);
  const Graph& g = x.graph();
  const EdgeSet diff = x.difference(y);
  std::vector<char> unused(g.edge_count(), 0);
  for (EdgeId e : diff) unused[e] = 1;

  // Outgoing difference edges per vertex, smallest id first.
  std::vector<std::vector<EdgeId>> out(g.vertex_count());
  for (EdgeId e : diff) out[x.tail(e)].push_back(e);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  auto next_out = [&](Vertex v) -> EdgeId {
    auto& list = out[v];
    while (cursor[v] < list.size() && !unused[list[cursor[v]]]) ++cursor[v];
    return cursor[v] < list.size() ? list[cursor[v]] : -1;
  };

  std::vector<EdgeSet> cycles;
  std::vector<int> pos_on_path(g.vertex_count(), -1);
  for (EdgeId first : diff) {
    if (!unused[first]) continue;
    std::vector<Vertex> path_vertices{x.tail(first)};
    std::vector<EdgeId> path_edges;
    pos_on_path[x.tail(first)] = 0;
    Vertex cur = x.tail(first);
    EdgeId e = first;
    while (true) {
      unused[e] = 0;
      path_edges.push_back(e);
      Vertex w = x.head(e);
      if (pos_on_path[w] >= 0) {
        const int k = pos_on_path[w];
        std::vector<EdgeId> cyc(path_edges.begin() + k, path_edges.end());
        for (std::size_t i = k + 1; i < path_vertices.size(); ++i) pos_on_path[path_vertices[i]] = -1;
        path_vertices.resize(k + 1);
        path_edges.resize(k);
        cycles.emplace_back(std::move(cyc));
        cur = w;
        if (path_edges.empty()) {
          pos_on_path[w] = -1;
          break;
        }
      } else {
        pos_on_path[w] = static_cast<int>(path_vertices.size());
        path_vertices.push_back(w);
        cur = w;
      }
      e = next_out(cur);
      if (e < 0) {
        for (Vertex v : path_vertices) pos_on_path[v] = -1;
        throw ValidationError("difference is not Eulerian: vertex '" + g.name(cur) +
                              "' has no unused outgoing difference edge");
      }
    }
  }
  return cycles;
}

int dicut_size(const Graph& g, const AlphaSpec& a, const VertexSet& side) {
  std::vector<char> in(g.vertex_count(), 0);
  int total = 0;
  for (Vertex v : side) {
    in.at(v) = 1;
    total += a.alpha.at(v);
  }
  for (const Edge& e : g.edges()) {
    if (in[e.u] && in[e.v]) --total;
  }
  return total;
}

} // namespace flipdist
