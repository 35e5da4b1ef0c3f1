#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace flipdist {

using Vertex = int;
using EdgeId = int;
using VertexSet = std::vector<Vertex>; // sorted by index, no duplicates

struct Edge {
  Vertex u;
  Vertex v;
};

// Undirected multigraph with string-named vertices and an optional fixed vertex
// (the "top" vertex that is never flipped). Edge ids are 0..m-1.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges,
        std::optional<std::string> top = std::nullopt);

  // Index-based constructor; edges[i] gets id i.
  static Graph from_indices(std::vector<std::string> vertices, std::vector<Edge> edges,
                            std::optional<Vertex> top = std::nullopt);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex index(std::string_view name) const; // throws ValidationError if unknown

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const { return incidence_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }
  Vertex other_end(EdgeId e, Vertex v) const;

  std::optional<Vertex> top() const { return top_; }
  Vertex require_top() const; // throws ValidationError when no top is set
  bool is_top(Vertex v) const { return top_ && *top_ == v; }

  // Position of v in the lexicographic order of vertex names; all tie-breaks use it.
  int name_rank(Vertex v) const { return rank_[v]; }
  // Vertices sorted by name.
  const std::vector<Vertex>& by_name() const { return by_name_; }

  VertexSet names_to_set(const std::vector<std::string>& names) const;
  std::vector<std::string> set_to_names(const VertexSet& set) const; // name-sorted

  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.top_ == b.top_ && a.edge_pairs_equal(b);
  }

private:
  void build();
  bool edge_pairs_equal(const Graph& other) const;

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::optional<Vertex> top_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<int> rank_;
  std::vector<Vertex> by_name_;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Sorted, duplicate-free set of edge ids.
class EdgeSet {
public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids); // sorts; throws on duplicates or negative ids

  const std::vector<EdgeId>& ids() const { return ids_; }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(EdgeId e) const;
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.ids_ <=> b.ids_; }

private:
  std::vector<EdgeId> ids_;
};

// A direction for every edge of a shared graph.
class Orientation {
public:
  Orientation() = default;
  Orientation(GraphPtr graph, const std::vector<Vertex>& tails);
  Orientation(GraphPtr graph, const std::vector<std::string>& tails);

  // reversed[i] == 1 means edge i points from edge(i).v to edge(i).u.
  static Orientation from_bits(GraphPtr graph, std::vector<std::uint8_t> reversed);
  // Every edge points from edge(i).u to edge(i).v.
  static Orientation canonical(GraphPtr graph);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }

  Vertex tail(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    return reversed_[e] ? ed.v : ed.u;
  }
  Vertex head(EdgeId e) const {
    const Edge& ed = graph_->edge(e);
    return reversed_[e] ? ed.u : ed.v;
  }
  bool leaves(EdgeId e, Vertex v) const { return tail(e) == v; }

  std::vector<Vertex> tails() const;
  const std::vector<std::uint8_t>& bits() const { return reversed_; }

  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const { return graph_->degree(v) - out_degree(v); }
  // Isolated vertices are both sources and sinks.
  bool is_source(Vertex v) const;
  bool is_sink(Vertex v) const;

  void reverse_edge(EdgeId e) { reversed_[e] ^= 1U; }
  void reverse_at(Vertex v);
  Orientation with_reversed(std::span<const EdgeId> edges) const;
  Orientation fully_reversed() const;

  // Edges whose direction differs from `other` (same graph required).
  EdgeSet difference(const Orientation& other) const;
  bool is_acyclic() const;

  // Compact byte key used for hashing states.
  std::string key() const { return std::string(reversed_.begin(), reversed_.end()); }

  friend bool operator==(const Orientation& a, const Orientation& b);

private:
  GraphPtr graph_;
  std::vector<std::uint8_t> reversed_;
};

bool same_graph(const Orientation& a, const Orientation& b);
void require_same_graph(const Orientation& a, const Orientation& b);

// A directed cut with its interior (the side away from top). `positive` means
// the cut edges leave the interior.
struct Dicut {
  EdgeSet edges;
  VertexSet interior;
  bool positive = true;

  friend bool operator==(const Dicut&, const Dicut&) = default;
};

struct SourcesSinks {
  VertexSet sources;
  VertexSet sinks;
};

SourcesSinks sources_and_sinks(const Orientation& o);

// Dicut induced by `side`; throws ValidationError when some crossing edge enters
// `side` or nothing crosses.
Dicut directed_cut(const Orientation& o, const VertexSet& side);

// Whether the arcs of `d` admit a potential that rises by one along each arc of
// `d` and is constant across the remaining edges of the graph.
bool is_balanced(const Orientation& o, const EdgeSet& d);

// Vertices not reachable from top once the edges of `cut` are removed.
VertexSet canonical_interior(const Graph& g, const EdgeSet& cut);

// Edges of the graph with exactly one end in `side`.
EdgeSet crossing_edges(const Graph& g, const VertexSet& side);

VertexSet complement(const Graph& g, const VertexSet& set);
bool contains(const VertexSet& set, Vertex v);
VertexSet make_vertex_set(std::vector<Vertex> vs);

// Connected components of the subgraph induced on `set`; whether it has one.
bool induces_connected(const Graph& g, const VertexSet& set);

} // namespace flipdist
