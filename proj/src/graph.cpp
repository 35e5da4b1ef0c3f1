#include "flipdist/graph.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace flipdist {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges,
             std::optional<std::string> top)
    : names_(std::move(vertices)) {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw ValidationError("duplicate vertex '" + names_[v] + "'");
    }
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = find(a);
    auto ib = find(b);
    if (!ia) throw ValidationError("edge references unknown vertex '" + a + "'");
    if (!ib) throw ValidationError("edge references unknown vertex '" + b + "'");
    edges_.push_back({*ia, *ib});
  }
  if (top) {
    auto t = find(*top);
    if (!t) throw ValidationError("top references unknown vertex '" + *top + "'");
    top_ = *t;
  }
  build();
}

Graph Graph::from_indices(std::vector<std::string> vertices, std::vector<Edge> edges,
                          std::optional<Vertex> top) {
  Graph g;
  g.names_ = std::move(vertices);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.index_.emplace(g.names_[v], v).second) {
      throw ValidationError("duplicate vertex '" + g.names_[v] + "'");
    }
  }
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.vertex_count() || e.v >= g.vertex_count()) {
      throw ValidationError("edge end out of range");
    }
  }
  g.edges_ = std::move(edges);
  if (top && (*top < 0 || *top >= g.vertex_count())) throw ValidationError("top out of range");
  g.top_ = top;
  g.build();
  return g;
}

void Graph::build() {
  incidence_.assign(names_.size(), {});
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u == ed.v) throw ValidationError("self-loop at vertex '" + names_[ed.u] + "'");
    incidence_[ed.u].push_back(e);
    incidence_[ed.v].push_back(e);
  }
  by_name_.resize(names_.size());
  std::iota(by_name_.begin(), by_name_.end(), 0);
  std::sort(by_name_.begin(), by_name_.end(),
            [&](Vertex a, Vertex b) { return names_[a] < names_[b]; });
  rank_.assign(names_.size(), 0);
  for (int i = 0; i < vertex_count(); ++i) rank_[by_name_[i]] = i;
}

bool Graph::edge_pairs_equal(const Graph& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index(std::string_view name) const {
  auto v = find(name);
  if (!v) throw ValidationError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edges_.at(e);
  return ed.u == v ? ed.v : ed.u;
}

Vertex Graph::require_top() const {
  if (!top_) throw ValidationError("graph has no top vertex");
  return *top_;
}

VertexSet Graph::names_to_set(const std::vector<std::string>& names) const {
  std::vector<Vertex> vs;
  vs.reserve(names.size());
  for (const auto& n : names) vs.push_back(index(n));
  return make_vertex_set(std::move(vs));
}

std::vector<std::string> Graph::set_to_names(const VertexSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back(names_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_connected() const {
  if (names_.empty()) return true;
  std::vector<char> seen(names_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : incidence_[x]) {
      Vertex y = other_end(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == vertex_count();
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (!ids_.empty() && ids_.front() < 0) throw ValidationError("negative edge id");
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw ValidationError("duplicate edge id in edge set");
  }
}

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

Orientation::Orientation(GraphPtr graph, const std::vector<Vertex>& tails)
    : graph_(std::move(graph)) {
  if (static_cast<int>(tails.size()) != graph_->edge_count()) {
    throw ValidationError("tails length " + std::to_string(tails.size()) +
                          " does not match edge count " + std::to_string(graph_->edge_count()));
  }
  reversed_.resize(tails.size());
  for (EdgeId e = 0; e < graph_->edge_count(); ++e) {
    const Edge& ed = graph_->edge(e);
    if (tails[e] == ed.u) {
      reversed_[e] = 0;
    } else if (tails[e] == ed.v) {
      reversed_[e] = 1;
    } else {
      throw ValidationError("tail of edge " + std::to_string(e) + " is not one of its ends");
    }
  }
}

Orientation::Orientation(GraphPtr graph, const std::vector<std::string>& tails)
    : Orientation(graph, [&] {
        std::vector<Vertex> idx;
        idx.reserve(tails.size());
        for (const auto& t : tails) idx.push_back(graph->index(t));
        return idx;
      }()) {}

Orientation Orientation::from_bits(GraphPtr graph, std::vector<std::uint8_t> reversed) {
  if (static_cast<int>(reversed.size()) != graph->edge_count()) {
    throw ValidationError("orientation size does not match edge count");
  }
  Orientation o;
  o.graph_ = std::move(graph);
  o.reversed_ = std::move(reversed);
  return o;
}

Orientation Orientation::canonical(GraphPtr graph) {
  std::vector<std::uint8_t> bits(graph->edge_count(), 0);
  return from_bits(std::move(graph), std::move(bits));
}

std::vector<Vertex> Orientation::tails() const {
  std::vector<Vertex> out(reversed_.size());
  for (EdgeId e = 0; e < static_cast<EdgeId>(reversed_.size()); ++e) out[e] = tail(e);
  return out;
}

int Orientation::out_degree(Vertex v) const {
  int d = 0;
  for (EdgeId e : graph_->incident(v)) d += tail(e) == v ? 1 : 0;
  return d;
}

bool Orientation::is_source(Vertex v) const {
  for (EdgeId e : graph_->incident(v)) {
    if (tail(e) != v) return false;
  }
  return true;
}

bool Orientation::is_sink(Vertex v) const {
  for (EdgeId e : graph_->incident(v)) {
    if (head(e) != v) return false;
  }
  return true;
}

void Orientation::reverse_at(Vertex v) {
  for (EdgeId e : graph_->incident(v)) reversed_[e] ^= 1U;
}

Orientation Orientation::with_reversed(std::span<const EdgeId> edges) const {
  Orientation o = *this;
  for (EdgeId e : edges) o.reversed_.at(e) ^= 1U;
  return o;
}

Orientation Orientation::fully_reversed() const {
  Orientation o = *this;
  for (auto& b : o.reversed_) b ^= 1U;
  return o;
}

EdgeSet Orientation::difference(const Orientation& other) const {
  require_same_graph(*this, other);
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < static_cast<EdgeId>(reversed_.size()); ++e) {
    if (reversed_[e] != other.reversed_[e]) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

bool Orientation::is_acyclic() const {
  const int n = graph_->vertex_count();
  std::vector<int> indeg(n, 0);
  for (EdgeId e = 0; e < graph_->edge_count(); ++e) ++indeg[head(e)];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  int done = 0;
  while (!ready.empty()) {
    Vertex x = ready.back();
    ready.pop_back();
    ++done;
    for (EdgeId e : graph_->incident(x)) {
      if (tail(e) == x && --indeg[head(e)] == 0) ready.push_back(head(e));
    }
  }
  return done == n;
}

bool operator==(const Orientation& a, const Orientation& b) {
  return same_graph(a, b) && a.reversed_ == b.reversed_;
}

bool same_graph(const Orientation& a, const Orientation& b) {
  if (!a.graph_ptr() || !b.graph_ptr()) return a.graph_ptr() == b.graph_ptr();
  return a.graph_ptr() == b.graph_ptr() || a.graph() == b.graph();
}

void require_same_graph(const Orientation& a, const Orientation& b) {
  if (!same_graph(a, b)) throw ValidationError("orientations are on different graphs");
}

SourcesSinks sources_and_sinks(const Orientation& o) {
  SourcesSinks out;
  for (Vertex v = 0; v < o.graph().vertex_count(); ++v) {
    if (o.is_source(v)) out.sources.push_back(v);
    if (o.is_sink(v)) out.sinks.push_back(v);
  }
  return out;
}

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

VertexSet complement(const Graph& g, const VertexSet& set) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!contains(set, v)) out.push_back(v);
  }
  return out;
}

EdgeSet crossing_edges(const Graph& g, const VertexSet& side) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : side) in[v] = 1;
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) ids.push_back(e);
  }
  return EdgeSet(std::move(ids));
}

Dicut directed_cut(const Orientation& o, const VertexSet& side) {
  const Graph& g = o.graph();
  if (side.empty() || static_cast<int>(side.size()) >= g.vertex_count()) {
    throw ValidationError("cut side must be a nonempty proper vertex subset");
  }
  for (Vertex v : side) {
    if (v < 0 || v >= g.vertex_count()) throw ValidationError("cut side has unknown vertex");
  }
  EdgeSet cross = crossing_edges(g, side);
  if (cross.empty()) throw ValidationError("empty crossing set: not a cut");
  for (EdgeId e : cross) {
    if (!contains(side, o.tail(e))) {
      throw ValidationError("edge " + g.name(o.tail(e)) + "->" + g.name(o.head(e)) +
                            " enters the cut side; not a directed cut");
    }
  }
  Dicut cut;
  cut.edges = std::move(cross);
  const bool top_inside = g.top() && contains(side, *g.top());
  cut.positive = !top_inside;
  cut.interior = top_inside ? complement(g, side) : side;
  return cut;
}

bool is_balanced(const Orientation& o, const EdgeSet& d) {
  const Graph& g = o.graph();
  const int n = g.vertex_count();
  std::vector<char> in_d(g.edge_count(), 0);
  for (EdgeId e : d) in_d.at(e) = 1;
  std::vector<long> potential(n, 0);
  std::vector<char> seen(n, 0);
  // Root each component at top when possible so potentials are comparable.
  std::vector<Vertex> roots;
  if (g.top()) roots.push_back(*g.top());
  for (Vertex v = 0; v < n; ++v) roots.push_back(v);
  for (Vertex root : roots) {
    if (seen[root]) continue;
    seen[root] = 1;
    potential[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(x)) {
        Vertex y = g.other_end(e, x);
        long step = 0;
        if (in_d[e]) step = o.tail(e) == x ? 1 : -1;
        long expected = potential[x] + step;
        if (!seen[y]) {
          seen[y] = 1;
          potential[y] = expected;
          queue.push_back(y);
        } else if (potential[y] != expected) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet canonical_interior(const Graph& g, const EdgeSet& cut) {
  const Vertex top = g.require_top();
  std::vector<char> removed(g.edge_count(), 0);
  for (EdgeId e : cut) removed.at(e) = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{top};
  seen[top] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      if (removed[e]) continue;
      Vertex y = g.other_end(e, x);
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) out.push_back(v);
  }
  return out;
}

bool induces_connected(const Graph& g, const VertexSet& set) {
  if (set.empty()) return true;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : set) in[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{set.front()};
  seen[set.front()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(x)) {
      Vertex y = g.other_end(e, x);
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == set.size();
}

} // namespace flipdist
