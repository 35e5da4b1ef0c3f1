#pragma once

#include "flipdist/graph.hpp"

#include <map>
#include <string>
#include <vector>

namespace flipdist {

// Prescribed out-degree per vertex, indexed by vertex.
struct AlphaSpec {
  std::vector<int> alpha;

  static AlphaSpec from_names(const Graph& g, const std::map<std::string, int>& values);
  static AlphaSpec of(const Orientation& o); // the out-degrees of `o`
  friend bool operator==(const AlphaSpec&, const AlphaSpec&) = default;
};

struct Bipartition {
  VertexSet left;  // V1: alpha = 1, matched edges leave it
  VertexSet right; // V2: alpha = degree - 1
};

// Perfect matching of a bipartite graph with an explicit bipartition.
struct Matching {
  GraphPtr graph;
  Bipartition sides;
  EdgeSet matched;
};

// Throws ValidationError unless the sides partition V, every edge crosses, and
// `matched` covers every vertex exactly once.
void validate_matching(const Matching& m);
void validate_bipartition(const Graph& g, const Bipartition& sides);

bool check_alpha(const Orientation& o, const AlphaSpec& a);

// alpha = 1 on the left side and degree - 1 on the right side.
AlphaSpec matching_alpha(const Graph& g, const Bipartition& sides);

struct AlphaOrientation {
  AlphaSpec alpha;
  Orientation orientation;
};

AlphaOrientation matching_to_orientation(const Matching& m);
Matching orientation_to_matching(const Orientation& o, const Bipartition& sides);

// Reverses the edges of a single directed cycle of `o`.
Orientation flip_cycle(const Orientation& o, const EdgeSet& cycle);

// Edge-disjoint directed cycles of `x` covering exactly the edges on which x and
// y differ. Greedy: start at the smallest unused edge, always continue along the
// smallest unused outgoing difference edge, and split off a cycle whenever the
// walk revisits a vertex.
std::vector<EdgeSet> difference_cycles(const Orientation& x, const Orientation& y);

// sum_{v in U} alpha(v) - |E(G[U])|, the size of any dicut leaving U.
int dicut_size(const Graph& g, const AlphaSpec& a, const VertexSet& side);

} // namespace flipdist
