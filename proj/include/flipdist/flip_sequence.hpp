#pragma once

#include "flipdist/graph.hpp"

#include <string>
#include <vector>

namespace flipdist {

enum class StepKind { cycle, vertex, cut };
enum class FlipDirection { source_to_sink, sink_to_source };

// One flip. Only the fields relevant to `kind` are meaningful.
struct FlipStep {
  StepKind kind = StepKind::vertex;
  EdgeSet edges;           // cycle
  Vertex vertex = -1;      // vertex
  FlipDirection direction = FlipDirection::source_to_sink;
  VertexSet interior;      // cut

  static FlipStep cycle(EdgeSet c) { return {StepKind::cycle, std::move(c), -1, {}, {}}; }
  static FlipStep at_vertex(Vertex v, FlipDirection d) { return {StepKind::vertex, {}, v, d, {}}; }
  static FlipStep cut(VertexSet interior) { return {StepKind::cut, {}, -1, {}, std::move(interior)}; }

  friend bool operator==(const FlipStep&, const FlipStep&) = default;
};

struct FlipSequence {
  std::vector<FlipStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  friend bool operator==(const FlipSequence&, const FlipSequence&) = default;
};

// Applies one step after checking it is legal in `o`; returns a reason on failure.
// Vertex steps require a source (or sink) other than top; cycle steps a directed
// cycle; cut steps a directed cut around the given interior.
bool apply_step(Orientation& o, const FlipStep& step, std::string* why = nullptr);

struct ReplayResult {
  bool ok = false;
  std::size_t failed_step = 0; // index of the first illegal step when !ok
  std::string message;
};

ReplayResult replay(const Orientation& x, const FlipSequence& f, const Orientation& y);

// Replays `f` from `x`, checking each step's legality; true iff it ends at `y`.
bool verify_sequence(const Orientation& x, const FlipSequence& f, const Orientation& y);

// Monotone: every vertex that is flipped is flipped in a single direction.
bool is_monotone(const FlipSequence& f);

} // namespace flipdist
