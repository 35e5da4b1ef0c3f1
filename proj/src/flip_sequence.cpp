#include "flipdist/flip_sequence.hpp"

#include <map>

namespace flipdist {

namespace {

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

bool is_directed_cycle(const Orientation& o, const EdgeSet& c) {
  if (c.empty()) return false;
  const Graph& g = o.graph();
  std::map<Vertex, int> out, in;
  for (EdgeId e : c) {
    if (e >= g.edge_count()) return false;
    ++out[o.tail(e)];
    ++in[o.head(e)];
  }
  for (const auto& [v, k] : out) {
    if (k != 1 || in[v] != 1) return false;
  }
  if (in.size() != out.size()) return false;
  // Follow successors from the first edge; a single cycle returns after |c| steps.
  std::map<Vertex, EdgeId> next;
  for (EdgeId e : c) next[o.tail(e)] = e;
  Vertex start = o.tail(c.ids().front());
  Vertex cur = start;
  std::size_t steps = 0;
  do {
    cur = o.head(next[cur]);
    ++steps;
  } while (cur != start && steps <= c.size());
  return steps == c.size();
}

} // namespace

bool apply_step(Orientation& o, const FlipStep& step, std::string* why) {
  const Graph& g = o.graph();
  switch (step.kind) {
  case StepKind::vertex: {
    if (step.vertex < 0 || step.vertex >= g.vertex_count()) return fail(why, "unknown vertex");
    if (g.is_top(step.vertex)) return fail(why, "top vertex cannot be flipped");
    const bool ok = step.direction == FlipDirection::source_to_sink ? o.is_source(step.vertex)
                                                                     : o.is_sink(step.vertex);
    if (!ok) {
      return fail(why, "vertex " + g.name(step.vertex) + " is not a " +
                           (step.direction == FlipDirection::source_to_sink ? "source" : "sink"));
    }
    o.reverse_at(step.vertex);
    return true;
  }
  case StepKind::cycle: {
    if (!is_directed_cycle(o, step.edges)) return fail(why, "edge set is not a directed cycle");
    for (EdgeId e : step.edges) o.reverse_edge(e);
    return true;
  }
  case StepKind::cut: {
    const VertexSet& inner = step.interior;
    if (inner.empty() || static_cast<int>(inner.size()) >= g.vertex_count()) {
      return fail(why, "cut interior must be a nonempty proper subset");
    }
    if (g.top() && contains(inner, *g.top())) return fail(why, "cut interior contains top");
    EdgeSet cross = crossing_edges(g, inner);
    if (cross.empty()) return fail(why, "empty cut");
    const bool leaving = contains(inner, o.tail(cross.ids().front()));
    for (EdgeId e : cross) {
      if (contains(inner, o.tail(e)) != leaving) return fail(why, "cut is not directed");
    }
    for (EdgeId e : cross) o.reverse_edge(e);
    return true;
  }
  }
  return fail(why, "unknown step kind");
}

ReplayResult replay(const Orientation& x, const FlipSequence& f, const Orientation& y) {
  ReplayResult r;
  if (!same_graph(x, y)) {
    r.message = "orientations are on different graphs";
    return r;
  }
  Orientation cur = x;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    std::string why;
    if (!apply_step(cur, f.steps[i], &why)) {
      r.failed_step = i;
      r.message = "step " + std::to_string(i) + ": " + why;
      return r;
    }
  }
  r.ok = cur == y;
  if (!r.ok) {
    r.failed_step = f.steps.size();
    r.message = "replay does not end at the target orientation";
  }
  return r;
}

bool verify_sequence(const Orientation& x, const FlipSequence& f, const Orientation& y) {
  return replay(x, f, y).ok;
}

bool is_monotone(const FlipSequence& f) {
  std::map<Vertex, FlipDirection> dir;
  for (const FlipStep& s : f.steps) {
    if (s.kind != StepKind::vertex) return false;
    auto [it, inserted] = dir.emplace(s.vertex, s.direction);
    if (!inserted && it->second != s.direction) return false;
  }
  return true;
}

} // namespace flipdist
