#pragma once

#include "flipdist/flip_sequence.hpp"
#include "flipdist/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flipdist {

enum class FlipModeKind { cycle, cycle_restricted, vertex, cut_bounded };

struct FlipMode {
  FlipModeKind kind = FlipModeKind::cycle;
  std::optional<Orientation> target; // cycle_restricted only
  int k = 0;                         // cut_bounded only

  static FlipMode cycle() { return {}; }
  static FlipMode cycle_restricted(Orientation target) { return {FlipModeKind::cycle_restricted, std::move(target), 0}; }
  static FlipMode vertex() { return {FlipModeKind::vertex, std::nullopt, 0}; }
  static FlipMode cut_bounded(int k) { return {FlipModeKind::cut_bounded, std::nullopt, k}; }

  // Throws ValidationError when parameters are missing or out of range.
  void validate() const;
  std::string name() const;
};

// Parses "cycle", "cycle-restricted", "vertex" or "cut-<k>"; target left unset.
FlipMode parse_mode(const std::string& text);

struct OracleCaps {
  std::size_t states = 1'000'000;
  std::size_t cycles = 10'000; // per state

  // Defaults overridden by FLIPDIST_CAPS="states=N,cycles=M" (either part optional).
  static OracleCaps from_env();
  static OracleCaps parse(const std::string& spec, OracleCaps base);
  static OracleCaps parse(const std::string& spec);
};

// Every simple directed cycle as its edge set, sorted lexicographically.
// Throws CapExceeded past `cap` cycles.
std::vector<EdgeSet> enumerate_simple_directed_cycles(const Orientation& o, std::size_t cap);

struct Neighbor {
  FlipStep step;
  Orientation result;
};

std::vector<Neighbor> flip_neighbors(const Orientation& o, const FlipMode& mode, const OracleCaps& caps = {});

struct OracleResult {
  std::optional<long> distance; // empty when y is unreachable (or beyond max_depth)
  FlipSequence witness;
  std::size_t explored = 0; // states dequeued
  std::size_t discovered = 0;
  bool depth_limited = false; // search stopped at max_depth without reaching y
};

// Breadth-first search over the flip graph. For cycle_restricted the target
// defaults to y. Throws CapExceeded past caps.states discovered states.
OracleResult bfs_distance(const Orientation& x, const Orientation& y, FlipMode mode, const OracleCaps& caps = {},
                          std::optional<long> max_depth = std::nullopt);

// Every state reachable from x, in BFS discovery order, plus its flip-graph edges
// (i < j, deduplicated).
struct FlipGraph {
  std::vector<Orientation> states;
  std::vector<std::pair<int, int>> edges;
};
FlipGraph explore_flip_graph(const Orientation& x, const FlipMode& mode, const OracleCaps& caps = {});

} // namespace flipdist
