#pragma once

#include "flipdist/graph.hpp"
#include "flipdist/orientations.hpp"
#include "flipdist/poset.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace flipdist {

struct ReductionOutput {
  std::string kind; // "hamiltonicity", "two-ham" or "jump-number"
  GraphPtr graph;
  Orientation x;
  Orientation y;
  std::optional<AlphaSpec> alpha;      // alpha-orientation reductions
  std::optional<Bipartition> sides;    // matching reduction
  std::optional<EdgeSet> x_matching;   // matching reduction
  std::optional<EdgeSet> y_matching;
  std::map<std::string, std::string> provenance; // new vertex -> origin ("vertex:v", "arc+:3", ...)
};

// C4-gadget graph of an orientation of a cubic graph without sources or sinks.
// Vertices "x_<v>", "x+_<arc id>", "x-_<arc id>". X and Y are perfect matchings,
// also returned as the corresponding alpha-orientations.
ReductionOutput reduce_hamiltonicity(const Orientation& d);

// alpha = 2 everywhere, X = d and Y = d reversed. Requires 2-in-2-out.
ReductionOutput reduce_two_ham(const Orientation& d);

// Hasse diagram plus a top joined to all elements. X orients covers upward and
// all top edges towards top; Y reverses the top edges. Requires height <= 2.
ReductionOutput reduce_jump_number(const FinitePoset& p);

// Minimum number of jumps over all linear extensions. Throws CapExceeded past `cap` elements.
int jump_number_bruteforce(const FinitePoset& p, std::size_t cap = 10);

// Directed Hamiltonian cycle by backtracking. Throws CapExceeded past `cap` vertices.
bool ham_cycle_exists(const Orientation& d, std::size_t cap = 16);

// Whether the arcs of a 2-in-2-out digraph split into two directed Hamiltonian
// cycles. Throws ValidationError on degree violations, CapExceeded past `cap`.
bool two_ham_decomposition(const Orientation& d, std::size_t cap = 16);

} // namespace flipdist
