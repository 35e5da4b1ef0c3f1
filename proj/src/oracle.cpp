#include "flipdist/oracle.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace flipdist {

void FlipMode::validate() const {
  if (kind == FlipModeKind::cycle_restricted && !target) {
    throw ValidationError("cycle-restricted mode needs a target orientation");
  }
  if (kind == FlipModeKind::cut_bounded && k < 1) throw ValidationError("cut bound k must be at least 1");
}

std::string FlipMode::name() const {
  switch (kind) {
  case FlipModeKind::cycle: return "cycle";
  case FlipModeKind::cycle_restricted: return "cycle-restricted";
  case FlipModeKind::vertex: return "vertex";
  case FlipModeKind::cut_bounded: return "cut-" + std::to_string(k);
  }
  return "?";
}

FlipMode parse_mode(const std::string& text) {
  if (text == "cycle") return FlipMode::cycle();
  if (text == "cycle-restricted" || text == "cycle_restricted") return {FlipModeKind::cycle_restricted, {}, 0};
  if (text == "vertex") return FlipMode::vertex();
  if (text.rfind("cut-", 0) == 0) {
    const std::string digits = text.substr(4);
    if (!digits.empty() && digits.size() <= 3 &&
        std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      FlipMode m = FlipMode::cut_bounded(std::stoi(digits));
      m.validate();
      return m;
    }
  }
  throw ValidationError("unknown flip mode '" + text + "'");
}

OracleCaps OracleCaps::parse(const std::string& spec, OracleCaps base) {
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw ValidationError("bad caps entry '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ValidationError("bad caps value '" + value + "'");
    }
    const std::size_t n = std::stoull(value);
    if (key == "states") {
      base.states = n;
    } else if (key == "cycles") {
      base.cycles = n;
    } else {
      throw ValidationError("unknown caps key '" + key + "'");
    }
  }
  return base;
}

OracleCaps OracleCaps::parse(const std::string& spec) { return parse(spec, OracleCaps{}); }

OracleCaps OracleCaps::from_env() {
  const char* env = std::getenv("FLIPDIST_CAPS");
  return env ? parse(env) : OracleCaps{};
}

std::vector<EdgeSet> enumerate_simple_directed_cycles(const Orientation& o, std::size_t cap) {
  const Graph& g = o.graph();
  const int n = g.vertex_count();
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[o.tail(e)].push_back(e);

  std::vector<EdgeSet> cycles;
  std::vector<char> on_path(n, 0);
  std::vector<EdgeId> path;
  // Cycles are rooted at their smallest vertex index.
  auto dfs = [&](auto&& self, Vertex root, Vertex v) -> void {
    for (EdgeId e : out[v]) {
      const Vertex w = o.head(e);
      if (w == root) {
        path.push_back(e);
        if (cycles.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " directed cycles");
        cycles.emplace_back(path);
        path.pop_back();
      } else if (w > root && !on_path[w]) {
        on_path[w] = 1;
        path.push_back(e);
        self(self, root, w);
        path.pop_back();
        on_path[w] = 0;
      }
    }
  };
  for (Vertex root = 0; root < n; ++root) {
    on_path[root] = 1;
    dfs(dfs, root, root);
    on_path[root] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

void enumerate_cut_sides(const Graph& g, int k, std::vector<VertexSet>& sides) {
  // Name-ordered combinations of size 1..k avoiding top.
  std::vector<Vertex> pool;
  for (Vertex v : g.by_name()) {
    if (!g.is_top(v)) pool.push_back(v);
  }
  std::vector<Vertex> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) sides.push_back(make_vertex_set(pick));
    if (static_cast<int>(pick.size()) == k) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

} // namespace

std::vector<Neighbor> flip_neighbors(const Orientation& o, const FlipMode& mode, const OracleCaps& caps) {
  mode.validate();
  const Graph& g = o.graph();
  std::vector<Neighbor> result;
  switch (mode.kind) {
  case FlipModeKind::cycle:
  case FlipModeKind::cycle_restricted: {
    std::optional<EdgeSet> allowed;
    if (mode.kind == FlipModeKind::cycle_restricted) {
      require_same_graph(o, *mode.target);
      allowed = o.difference(*mode.target);
    }
    for (EdgeSet& c : enumerate_simple_directed_cycles(o, caps.cycles)) {
      if (allowed && !std::all_of(c.begin(), c.end(), [&](EdgeId e) { return allowed->contains(e); })) continue;
      Orientation next = o.with_reversed(c.ids());
      result.push_back({FlipStep::cycle(std::move(c)), std::move(next)});
    }
    break;
  }
  case FlipModeKind::vertex:
    for (Vertex v : g.by_name()) {
      if (g.is_top(v) || g.degree(v) == 0) continue;
      const bool src = o.is_source(v);
      if (!src && !o.is_sink(v)) continue;
      Orientation next = o;
      next.reverse_at(v);
      result.push_back({FlipStep::at_vertex(v, src ? FlipDirection::source_to_sink : FlipDirection::sink_to_source),
                        std::move(next)});
    }
    break;
  case FlipModeKind::cut_bounded: {
    std::vector<VertexSet> sides;
    enumerate_cut_sides(g, mode.k, sides);
    for (VertexSet& side : sides) {
      EdgeSet cross = crossing_edges(g, side);
      if (cross.empty()) continue;
      const bool out = contains(side, o.tail(*cross.begin()));
      if (!std::all_of(cross.begin(), cross.end(), [&](EdgeId e) { return contains(side, o.tail(e)) == out; })) {
        continue;
      }
      // Minimal cuts have both shores connected.
      if (!induces_connected(g, side) || !induces_connected(g, complement(g, side))) continue;
      Orientation next = o.with_reversed(cross.ids());
      result.push_back({FlipStep::cut(std::move(side)), std::move(next)});
    }
    break;
  }
  }
  return result;
}

OracleResult bfs_distance(const Orientation& x, const Orientation& y, FlipMode mode, const OracleCaps& caps,
                          std::optional<long> max_depth) {
  require_same_graph(x, y);
  if (mode.kind == FlipModeKind::cycle_restricted && !mode.target) mode.target = y;
  mode.validate();
  OracleResult r;
  struct Node {
    Orientation o;
    int parent;
    FlipStep step;
    long depth;
  };
  std::vector<Node> nodes{{x, -1, {}, 0}};
  std::unordered_map<std::string, int> seen{{x.key(), 0}};
  std::deque<int> queue{0};
  int found = x == y ? 0 : -1;
  while (found < 0 && !queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    ++r.explored;
    if (max_depth && nodes[i].depth >= *max_depth) {
      r.depth_limited = true;
      continue;
    }
    for (Neighbor& nb : flip_neighbors(nodes[i].o, mode, caps)) {
      auto [it, inserted] = seen.emplace(nb.result.key(), static_cast<int>(nodes.size()));
      if (!inserted) continue;
      if (nodes.size() >= caps.states) throw CapExceeded("more than " + std::to_string(caps.states) + " states");
      const bool hit = nb.result == y;
      nodes.push_back({std::move(nb.result), i, std::move(nb.step), nodes[i].depth + 1});
      queue.push_back(static_cast<int>(nodes.size()) - 1);
      if (hit) {
        found = static_cast<int>(nodes.size()) - 1;
        break;
      }
    }
  }
  r.discovered = nodes.size();
  if (found < 0) return r;
  r.depth_limited = false;
  r.distance = nodes[found].depth;
  for (int i = found; nodes[i].parent >= 0; i = nodes[i].parent) r.witness.steps.push_back(nodes[i].step);
  std::reverse(r.witness.steps.begin(), r.witness.steps.end());
  return r;
}

FlipGraph explore_flip_graph(const Orientation& x, const FlipMode& mode, const OracleCaps& caps) {
  mode.validate();
  FlipGraph fg{{x}, {}};
  std::unordered_map<std::string, int> seen{{x.key(), 0}};
  std::set<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < fg.states.size(); ++i) {
    for (Neighbor& nb : flip_neighbors(fg.states[i], mode, caps)) {
      auto [it, inserted] = seen.emplace(nb.result.key(), static_cast<int>(fg.states.size()));
      if (inserted) {
        if (fg.states.size() >= caps.states) throw CapExceeded("more than " + std::to_string(caps.states) + " states");
        fg.states.push_back(std::move(nb.result));
      }
      const int a = static_cast<int>(i);
      const int b = it->second;
      if (a != b) edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  fg.edges.assign(edges.begin(), edges.end());
  return fg;
}

} // namespace flipdist
