#include "flipdist/reductions.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace flipdist {

ReductionOutput reduce_hamiltonicity(const Orientation& d) {
  const Graph& dg = d.graph();
  const int n = dg.vertex_count();
  if (n < 3) throw ValidationError("digraph needs at least 3 vertices");
  for (Vertex v = 0; v < n; ++v) {
    if (dg.degree(v) != 3) throw ValidationError("vertex '" + dg.name(v) + "' does not have degree 3");
    const int out = d.out_degree(v);
    if (out != 1 && out != 2) {
      throw ValidationError("vertex '" + dg.name(v) + "' has outdegree " + std::to_string(out));
    }
  }
  const int m = dg.edge_count();
  ReductionOutput r;
  r.kind = "hamiltonicity";
  std::vector<std::string> names;
  auto xv = [](Vertex v) { return v; };
  auto plus = [n](EdgeId e) { return n + 2 * e; };
  auto minus = [n](EdgeId e) { return n + 2 * e + 1; };
  for (Vertex v = 0; v < n; ++v) {
    names.push_back("x_" + dg.name(v));
    r.provenance[names.back()] = "vertex:" + dg.name(v);
  }
  for (EdgeId e = 0; e < m; ++e) {
    names.push_back("x+_" + std::to_string(e));
    r.provenance[names.back()] = "arc+:" + std::to_string(e);
    names.push_back("x-_" + std::to_string(e));
    r.provenance[names.back()] = "arc-:" + std::to_string(e);
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < m; ++e) edges.push_back({plus(e), minus(e)});

  std::vector<EdgeId> x_edges, y_edges;
  Bipartition sides;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<EdgeId> in, out;
    for (EdgeId e : dg.incident(v)) (d.tail(e) == v ? out : in).push_back(e);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    const int base = static_cast<int>(edges.size());
    if (out.size() == 1) {
      // Incoming e < f, outgoing g.
      const EdgeId e = in[0], f = in[1], g = out[0];
      edges.push_back({plus(e), xv(v)});
      edges.push_back({plus(f), xv(v)});
      edges.push_back({plus(e), minus(g)});
      edges.push_back({plus(f), minus(g)});
      x_edges.insert(x_edges.end(), {base, base + 3});
      y_edges.insert(y_edges.end(), {base + 1, base + 2});
      sides.left.push_back(xv(v));
    } else {
      // Outgoing e < f, incoming g.
      const EdgeId e = out[0], f = out[1], g = in[0];
      edges.push_back({minus(e), xv(v)});
      edges.push_back({minus(f), xv(v)});
      edges.push_back({minus(e), plus(g)});
      edges.push_back({minus(f), plus(g)});
      x_edges.insert(x_edges.end(), {base + 1, base + 2});
      y_edges.insert(y_edges.end(), {base, base + 3});
      sides.right.push_back(xv(v));
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    sides.left.push_back(minus(e));
    sides.right.push_back(plus(e));
  }
  sides.left = make_vertex_set(sides.left);
  sides.right = make_vertex_set(sides.right);
  r.graph = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges)));
  r.sides = sides;
  r.x_matching = EdgeSet(x_edges);
  r.y_matching = EdgeSet(y_edges);
  AlphaOrientation ax = matching_to_orientation({r.graph, sides, *r.x_matching});
  AlphaOrientation ay = matching_to_orientation({r.graph, sides, *r.y_matching});
  r.alpha = ax.alpha;
  r.x = ax.orientation;
  r.y = ay.orientation;
  return r;
}

ReductionOutput reduce_two_ham(const Orientation& d) {
  const Graph& g = d.graph();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (d.out_degree(v) != 2 || d.in_degree(v) != 2) {
      throw ValidationError("vertex '" + g.name(v) + "' is not 2-in-2-out");
    }
  }
  ReductionOutput r;
  r.kind = "two-ham";
  r.graph = d.graph_ptr();
  r.alpha = AlphaSpec{std::vector<int>(g.vertex_count(), 2)};
  r.x = d;
  r.y = d.fully_reversed();
  for (const auto& name : g.names()) r.provenance[name] = "vertex:" + name;
  return r;
}

ReductionOutput reduce_jump_number(const FinitePoset& p) {
  if (p.height() > 2) throw ValidationError("poset has height " + std::to_string(p.height()) + ", at most 2 allowed");
  std::vector<std::string> names = p.elements();
  std::string top = "top";
  while (std::find(names.begin(), names.end(), top) != names.end()) top += "'";
  names.push_back(top);
  const Vertex t = p.size();
  std::vector<Edge> edges;
  std::vector<Vertex> x_tails, y_tails;
  for (auto [a, b] : p.covers()) {
    edges.push_back({a, b});
    x_tails.push_back(a);
    y_tails.push_back(a);
  }
  for (Vertex v = 0; v < p.size(); ++v) {
    edges.push_back({v, t});
    x_tails.push_back(v);
    y_tails.push_back(t);
  }
  ReductionOutput r;
  r.kind = "jump-number";
  r.graph = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges), t));
  r.x = Orientation(r.graph, x_tails);
  r.y = Orientation(r.graph, y_tails);
  for (const auto& e : p.elements()) r.provenance[e] = "element:" + e;
  r.provenance[top] = "top";
  return r;
}

int jump_number_bruteforce(const FinitePoset& p, std::size_t cap) {
  const int n = p.size();
  if (static_cast<std::size_t>(n) > cap) {
    throw CapExceeded("poset has " + std::to_string(n) + " elements, cap is " + std::to_string(cap));
  }
  if (n <= 1) return 0;
  // Linear extensions grown one element at a time; best[mask][last] is the
  // fewest jumps over all extension prefixes placing `mask` and ending at `last`.
  std::vector<unsigned> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.less(y, x)) below[x] |= 1U << y;
    }
  }
  const int inf = std::numeric_limits<int>::max();
  const unsigned full = (1U << n) - 1;
  std::vector<std::vector<int>> best(1U << n, std::vector<int>(n, inf));
  for (int x = 0; x < n; ++x) {
    if (below[x] == 0) best[1U << x][x] = 0;
  }
  for (unsigned mask = 1; mask <= full; ++mask) {
    for (int last = 0; last < n; ++last) {
      if (best[mask][last] == inf) continue;
      for (int x = 0; x < n; ++x) {
        if ((mask >> x & 1U) || (below[x] & ~mask)) continue;
        const int jumps = best[mask][last] + (p.less(last, x) ? 0 : 1);
        int& slot = best[mask | 1U << x][x];
        slot = std::min(slot, jumps);
      }
    }
  }
  return *std::min_element(best[full].begin(), best[full].end());
}

bool ham_cycle_exists(const Orientation& d, std::size_t cap) {
  const Graph& g = d.graph();
  const int n = g.vertex_count();
  if (static_cast<std::size_t>(n) > cap) throw CapExceeded("digraph exceeds the Hamiltonicity search cap");
  if (n == 0) return false;
  std::vector<std::vector<Vertex>> succ(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) succ[d.tail(e)].push_back(d.head(e));
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto extend = [&](auto&& self, Vertex v, int placed) -> bool {
    if (placed == n) {
      return std::find(succ[v].begin(), succ[v].end(), 0) != succ[v].end();
    }
    for (Vertex w : succ[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (self(self, w, placed + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return extend(extend, 0, 1);
}

bool two_ham_decomposition(const Orientation& d, std::size_t cap) {
  const Graph& g = d.graph();
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (d.out_degree(v) != 2 || d.in_degree(v) != 2) {
      throw ValidationError("vertex '" + g.name(v) + "' is not 2-in-2-out");
    }
  }
  if (static_cast<std::size_t>(n) > cap) throw CapExceeded("digraph exceeds the decomposition search cap");
  std::vector<std::array<EdgeId, 2>> out(n);
  std::vector<int> filled(n, 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[d.tail(e)][filled[d.tail(e)]++] = e;

  // choice[v] picks which out-arc of v is red; the other is blue.
  std::vector<int> choice(n, 0);
  std::vector<int> red_in(n, 0);
  auto single_cycle = [&](int colour) {
    std::vector<char> seen(n, 0);
    Vertex v = 0;
    for (int steps = 0; steps < n; ++steps) {
      if (seen[v]) return false;
      seen[v] = 1;
      v = d.head(out[v][colour == 0 ? choice[v] : 1 - choice[v]]);
    }
    return v == 0;
  };
  auto search = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return single_cycle(0) && single_cycle(1);
    for (int c = 0; c < 2; ++c) {
      const Vertex h = d.head(out[v][c]);
      if (red_in[h] == 1) continue; // each vertex takes exactly one red arc in
      choice[v] = c;
      ++red_in[h];
      if (self(self, v + 1)) return true;
      --red_in[h];
    }
    return false;
  };
  return search(search, 0);
}

} // namespace flipdist
