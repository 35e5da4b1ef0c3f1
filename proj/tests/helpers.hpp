#pragma once

// Independent reference computations for the tests. Everything here is brute
// force over explicit enumerations and shares no code paths with the library
// beyond the basic Graph/Orientation containers.

#include "flipdist/generators.hpp"
#include "flipdist/graph.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testref {

using namespace flipdist;

// One traversal of a simple cycle of the underlying graph: (edge, traversed u->v?).
using Walk = std::vector<std::pair<EdgeId, bool>>;

// Every simple cycle of the underlying multigraph, once per cycle (fixed start at
// its smallest vertex, one of the two directions). Includes 2-cycles from parallel edges.
inline std::vector<Walk> undirected_cycles(const Graph& g) {
  std::vector<Walk> out;
  std::set<std::vector<EdgeId>> seen;
  const int n = g.vertex_count();
  std::vector<char> on(n, 0);
  Walk path;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex root, Vertex v) {
    for (EdgeId e : g.incident(v)) {
      if (!path.empty() && path.back().first == e) continue;
      const Vertex w = g.other_end(e, v);
      const bool forward = g.edge(e).u == v;
      if (w == root) {
        if (path.empty()) continue;
        Walk c = path;
        c.emplace_back(e, forward);
        std::vector<EdgeId> key;
        for (auto [id, f] : c) key.push_back(id);
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second) out.push_back(c);
      } else if (w > root && !on[w]) {
        on[w] = 1;
        path.emplace_back(e, forward);
        dfs(root, w);
        path.pop_back();
        on[w] = 0;
      }
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    on[r] = 1;
    dfs(r, r);
    on[r] = 0;
  }
  return out;
}

// Number of edges of the walk that o directs along the traversal.
inline int forward_count(const Orientation& o, const Walk& w) {
  int k = 0;
  for (auto [e, uv] : w) {
    const bool along = uv ? o.tail(e) == o.graph().edge(e).u : o.tail(e) == o.graph().edge(e).v;
    k += along ? 1 : 0;
  }
  return k;
}

// Same cycle values: every cycle has equally many forward edges in x and y.
inline bool brute_same_c(const Orientation& x, const Orientation& y) {
  for (const Walk& w : undirected_cycles(x.graph())) {
    if (forward_count(x, w) != forward_count(y, w)) return false;
  }
  return true;
}

// Balanced edge set: on every cycle, forward and backward D-edges match.
inline bool brute_balanced(const Orientation& o, const std::set<EdgeId>& d) {
  for (const Walk& w : undirected_cycles(o.graph())) {
    int signed_count = 0;
    for (auto [e, uv] : w) {
      if (!d.count(e)) continue;
      const bool along = uv ? o.tail(e) == o.graph().edge(e).u : o.tail(e) == o.graph().edge(e).v;
      signed_count += along ? 1 : -1;
    }
    if (signed_count != 0) return false;
  }
  return true;
}

// Acyclicity by repeated removal of sinks.
inline bool brute_acyclic(const Orientation& o) {
  const Graph& g = o.graph();
  std::vector<char> gone(g.vertex_count(), 0);
  for (int round = 0; round < g.vertex_count(); ++round) {
    bool removed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (gone[v]) continue;
      bool sink = true;
      for (EdgeId e : g.incident(v)) {
        if (o.tail(e) == v && !gone[o.head(e)]) sink = false;
      }
      if (sink) {
        gone[v] = 1;
        removed = true;
        break;
      }
    }
    if (!removed) return false;
  }
  return true;
}

// Plain BFS over vertex flips (sources/sinks other than top), returning the
// distance table from x keyed by orientation bits.
inline std::map<std::vector<std::uint8_t>, int> vertex_flip_ball(const Orientation& x) {
  const Graph& g = x.graph();
  std::map<std::vector<std::uint8_t>, int> dist{{x.bits(), 0}};
  std::vector<Orientation> frontier{x};
  while (!frontier.empty()) {
    std::vector<Orientation> next;
    for (const Orientation& o : frontier) {
      const int d = dist[o.bits()];
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.is_top(v) || g.degree(v) == 0) continue;
        int out = 0;
        for (EdgeId e : g.incident(v)) out += o.tail(e) == v ? 1 : 0;
        if (out != 0 && out != g.degree(v)) continue;
        Orientation p = o;
        for (EdgeId e : g.incident(v)) p.reverse_edge(e);
        if (dist.emplace(p.bits(), d + 1).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

// Random same-c pair on a random connected graph with n vertices.
inline std::pair<Orientation, Orientation> random_pair(int n, int extra, std::mt19937_64& rng) {
  Orientation base = random_c_instance(n, extra, rng);
  Orientation x = random_flip_walk(base, 40, rng);
  Orientation y = random_flip_walk(base, 40, rng);
  return {x, y};
}

} // namespace testref
