#pragma once

#include "flipdist/flip_sequence.hpp"
#include "flipdist/graph.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace flipdist {

// Two orientations carry the same cycle values c iff their difference is balanced.
bool same_c(const Orientation& x, const Orientation& y);

Orientation vertex_flip(const Orientation& o, Vertex v);
Orientation cut_flip(const Orientation& o, const VertexSet& side);

// Result of collapsing every strongly connected component of x to one vertex.
struct RigidContraction {
  Orientation x;
  Orientation y;
  std::vector<Vertex> vertex_map;  // original vertex -> contracted vertex
  std::vector<EdgeId> edge_origin; // contracted edge id -> original edge id
  std::vector<VertexSet> members;  // contracted vertex -> original vertices

  // Maps a vertex-flip sequence of the contracted instance back to the original
  // graph. Flips at merged vertices become cut flips of the whole component.
  FlipSequence expand(const FlipSequence& f) const;
  bool trivial() const;
};

// Merged vertices take the name of their top member, or else their smallest name.
RigidContraction contract_rigid(const Orientation& x, const Orientation& y);

// Flips the name-smallest sink other than top until only top is a sink.
Orientation lattice_minimum(const Orientation& x);

// Flip counts per vertex (top fixed at 0) on an upward path from the minimum;
// the same for every such path.
struct ZVector {
  std::vector<int> counts; // indexed by vertex

  long l1_distance(const ZVector& other) const;
  friend bool operator==(const ZVector&, const ZVector&) = default;
};

ZVector z_embedding(const Orientation& x);

struct CLattice {
  std::vector<Orientation> elements; // sorted by (rank, z-vector)
  std::vector<ZVector> z;
  std::vector<std::pair<int, int>> covers; // (lower, upper), sorted
};

// Every orientation reachable from the lattice minimum by source flips.
CLattice enumerate_lattice(const Orientation& x, std::size_t cap);

// Throws ValidationError unless the graph has a top, is connected and o is acyclic.
void require_c_instance(const Orientation& o);

} // namespace flipdist
