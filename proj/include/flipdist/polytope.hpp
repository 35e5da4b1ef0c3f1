#pragma once

#include "flipdist/graph.hpp"
#include "flipdist/orientations.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace flipdist {

using ElementSet = std::set<std::string>;
using ElementPair = std::pair<std::string, std::string>;

// Independent sets hold at most capacity(c) elements of each class c.
struct PartitionMatroid {
  std::vector<std::string> ground;
  std::map<std::string, std::string> class_of;
  std::map<std::string, int> capacity;

  // Throws ValidationError on unclassed elements, unknown classes, negative capacities.
  void validate() const;
  bool is_independent(const ElementSet& s) const;
  // Meets min(capacity, class size) in every class.
  bool is_basis(const ElementSet& s) const;
};

// Bipartite graph on B\F (left) and F\B (right); ij is an edge iff B-i+j is a basis.
struct BipartiteExchange {
  std::vector<std::string> left;
  std::vector<std::string> right;
  std::vector<ElementPair> edges; // (left, right), sorted
};

BipartiteExchange exchangeability_graph(const PartitionMatroid& m, const ElementSet& b, const ElementSet& f);

struct PerfectMatchingResult {
  enum class Status { unique, none, multiple };
  Status status = Status::none;
  std::vector<ElementPair> matching; // (left, right), sorted; set when a matching exists
};

PerfectMatchingResult unique_perfect_matching(const BipartiteExchange& h);

struct AdjacencyResult {
  bool adjacent = false;
  std::optional<std::vector<ElementPair>> p_plus;  // pairs (a, b), a in A\B
  std::optional<std::vector<ElementPair>> p_minus; // pairs (a, b), a in A\B
  std::string reason;
};

// Adjacency of two common bases on the common base polytope of mp and mm.
// Throws ValidationError unless A and B are distinct common bases.
AdjacencyResult polytope_adjacent(const ElementSet& a, const ElementSet& b, const PartitionMatroid& mp,
                                  const PartitionMatroid& mm);

// Edges named "e<id>"; classes "v1:<x>" by the left end and "v2:<x>" by the right end.
std::pair<PartitionMatroid, PartitionMatroid> matching_matroids(const Graph& g, const Bipartition& sides);
ElementSet edge_elements(const EdgeSet& edges);

// Each edge yields two arcs "e<id>:<tail>". The first matroid picks one arc per
// edge, the second alpha(v) arcs leaving each v.
std::pair<PartitionMatroid, PartitionMatroid> alpha_matroids(const Graph& g, const AlphaSpec& alpha);
ElementSet orientation_elements(const Orientation& o);

} // namespace flipdist
