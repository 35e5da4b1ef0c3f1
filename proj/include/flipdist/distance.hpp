#pragma once

#include "flipdist/flip_sequence.hpp"
#include "flipdist/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flipdist {

// Disjoint dicuts of x whose edges together are exactly the difference of x and y.
struct DicutFamily {
  std::vector<Dicut> cuts;
  bool laminar = false; // set once disjointness, coverage and nesting were verified
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

struct CutPoset {
  DicutFamily family;
  std::vector<std::optional<int>> parent; // smallest cut whose interior strictly contains this one
  std::vector<int> weight;
  std::vector<Sign> sign;
  std::vector<VertexSet> strict_interior;
  std::vector<int> cut_of_vertex; // smallest cut whose interior holds the vertex, or -1

  // Number of flips at v on a monotone sequence: w of its smallest cut.
  int flips_at(Vertex v) const;
  // Sum of flips_at over all vertices.
  long total_flips() const;
};

// Splits the difference of x and y into disjoint minimal dicuts of x. Repeatedly
// takes the name-smallest source block of the difference (blocks are the
// components left after deleting the difference edges), groups its out-arcs by
// the weak component of the remaining blocks that holds their head, records each
// group as a dicut, and merges the block with its out-neighbours.
// Throws ValidationError if x, y are not same-c acyclic orientations of a
// connected graph with top; InternalError if the result fails verification.
DicutFamily laminar_decompose(const Orientation& x, const Orientation& y);

// Parent links, weights and signs of a laminar family. Throws ValidationError if
// the family is not laminar or some cut does not match its canonical interior.
CutPoset build_cut_poset(const DicutFamily& f, const Graph& g);

struct InteriorFlips {
  FlipSequence sequence;
  Orientation result;
};

// Flips every interior vertex of `s` exactly once: sources (positive cut) or
// sinks (negative cut), smallest name first. Throws ValidationError if `s` is
// not a dicut of x.
InteriorFlips flip_interior(const Orientation& x, const Dicut& s);

struct MonotoneReport {
  bool fell_back = false; // the cut-poset construction failed and meet_route was used
  std::string reason;
  std::size_t cuts = 0;
};

// Monotone vertex-flip sequence from x to y of minimum length.
FlipSequence monotone_sequence(const Orientation& x, const Orientation& y, MonotoneReport* report = nullptr);

// Number of meet_route fallbacks taken by monotone_sequence in this process.
std::size_t monotone_fallback_count();

long vertex_flip_distance(const Orientation& x, const Orientation& y);

// Down by sink flips from x to the lattice meet of x and y, then up by source
// flips to y.
FlipSequence meet_route(const Orientation& x, const Orientation& y);
Orientation lattice_meet(const Orientation& x, const Orientation& y);
Orientation lattice_join(const Orientation& x, const Orientation& y);

// Validates that x, y form a same-c pair on a connected graph with top and are acyclic.
void require_distance_instance(const Orientation& x, const Orientation& y);

} // namespace flipdist
