#include "flipdist/corientations.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace flipdist {

bool same_c(const Orientation& x, const Orientation& y) {
  require_same_graph(x, y);
  return is_balanced(x, x.difference(y));
}

Orientation vertex_flip(const Orientation& o, Vertex v) {
  const Graph& g = o.graph();
  if (v < 0 || v >= g.vertex_count()) throw ValidationError("unknown vertex");
  if (g.is_top(v)) throw ValidationError("top vertex '" + g.name(v) + "' is fixed");
  if (!o.is_source(v) && !o.is_sink(v)) {
    throw ValidationError("vertex '" + g.name(v) + "' is neither a source nor a sink");
  }
  Orientation out = o;
  out.reverse_at(v);
  return out;
}

Orientation cut_flip(const Orientation& o, const VertexSet& side) {
  Dicut cut = directed_cut(o, side);
  return o.with_reversed(cut.edges.ids());
}

void require_c_instance(const Orientation& o) {
  const Graph& g = o.graph();
  g.require_top();
  if (!g.is_connected()) throw ValidationError("graph must be connected");
  if (!o.is_acyclic()) {
    throw ValidationError("orientation has a directed cycle; contract rigid components first");
  }
}

namespace {

// Iterative Tarjan; components numbered in reverse topological order.
std::vector<int> strong_components(const Orientation& o, int& count) {
  const Graph& g = o.graph();
  const int n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  int next_index = 0;
  count = 0;
  struct Frame {
    Vertex v;
    std::size_t pos;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto inc = g.incident(f.v);
      if (f.pos < inc.size()) {
        EdgeId e = inc[f.pos++];
        if (o.tail(e) != f.v) continue;
        Vertex w = o.head(e);
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      if (low[v] == index[v]) {
        while (true) {
          Vertex w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = count;
          if (w == v) break;
        }
        ++count;
      }
    }
  }
  return comp;
}

} // namespace

RigidContraction contract_rigid(const Orientation& x, const Orientation& y) {
  require_same_graph(x, y);
  const Graph& g = x.graph();
  int count = 0;
  std::vector<int> comp = strong_components(x, count);

  // Number contracted vertices by the name-smallest member so output is stable.
  std::vector<VertexSet> members(count);
  for (Vertex v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);
  std::vector<int> order(count);
  for (int c = 0; c < count; ++c) order[c] = c;
  auto first_member = [&](int c) {
    Vertex best = members[c].front();
    for (Vertex v : members[c]) {
      if (g.name_rank(v) < g.name_rank(best)) best = v;
    }
    return best;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return first_member(a) < first_member(b);
  });
  std::vector<int> renumber(count);
  for (int i = 0; i < count; ++i) renumber[order[i]] = i;

  RigidContraction rc;
  rc.vertex_map.resize(g.vertex_count());
  rc.members.resize(count);
  std::vector<std::string> names(count);
  std::optional<Vertex> top;
  for (int c = 0; c < count; ++c) {
    const int id = renumber[c];
    rc.members[id] = members[c];
    Vertex label = first_member(c);
    for (Vertex v : members[c]) {
      if (g.is_top(v)) {
        label = v;
        top = id;
      }
    }
    names[id] = g.name(label);
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) rc.vertex_map[v] = renumber[comp[v]];

  std::vector<Edge> edges;
  std::vector<std::uint8_t> xbits, ybits;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Vertex cu = rc.vertex_map[g.edge(e).u];
    const Vertex cv = rc.vertex_map[g.edge(e).v];
    if (cu == cv) {
      if (x.tail(e) != y.tail(e)) {
        throw ValidationError("orientations disagree on edge " + std::to_string(e) +
                              " inside a strongly connected component");
      }
      continue;
    }
    rc.edge_origin.push_back(e);
    edges.push_back({cu, cv});
    xbits.push_back(x.bits()[e]);
    ybits.push_back(y.bits()[e]);
  }
  auto cg = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges), top));
  rc.x = Orientation::from_bits(cg, std::move(xbits));
  rc.y = Orientation::from_bits(cg, std::move(ybits));
  return rc;
}

bool RigidContraction::trivial() const {
  return std::all_of(members.begin(), members.end(), [](const VertexSet& m) { return m.size() == 1; });
}

FlipSequence RigidContraction::expand(const FlipSequence& f) const {
  FlipSequence out;
  for (const FlipStep& s : f.steps) {
    switch (s.kind) {
    case StepKind::vertex:
      if (members.at(s.vertex).size() == 1) {
        out.steps.push_back(FlipStep::at_vertex(members[s.vertex].front(), s.direction));
      } else {
        out.steps.push_back(FlipStep::cut(members[s.vertex]));
      }
      break;
    case StepKind::cut: {
      std::vector<Vertex> inner;
      for (Vertex c : s.interior) inner.insert(inner.end(), members.at(c).begin(), members.at(c).end());
      out.steps.push_back(FlipStep::cut(make_vertex_set(std::move(inner))));
      break;
    }
    case StepKind::cycle: {
      std::vector<EdgeId> ids;
      for (EdgeId e : s.edges) ids.push_back(edge_origin.at(e));
      out.steps.push_back(FlipStep::cycle(EdgeSet(std::move(ids))));
      break;
    }
    }
  }
  return out;
}

Orientation lattice_minimum(const Orientation& x) {
  require_c_instance(x);
  const Graph& g = x.graph();
  Orientation cur = x;
  std::vector<int> out(g.vertex_count());
  std::set<std::pair<int, Vertex>> sinks;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out[v] = cur.out_degree(v);
    if (out[v] == 0 && !g.is_top(v) && g.degree(v) > 0) sinks.emplace(g.name_rank(v), v);
  }
  while (!sinks.empty()) {
    const Vertex v = sinks.begin()->second;
    sinks.erase(sinks.begin());
    cur.reverse_at(v);
    out[v] = g.degree(v);
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.other_end(e, v);
      if (--out[w] == 0 && !g.is_top(w)) sinks.emplace(g.name_rank(w), w);
    }
  }
  return cur;
}

long ZVector::l1_distance(const ZVector& other) const {
  long total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += std::abs(counts[i] - other.counts.at(i));
  return total;
}

ZVector z_embedding(const Orientation& x) {
  require_c_instance(x);
  const Graph& g = x.graph();
  const Orientation low = lattice_minimum(x);
  // Along any upward path the flips at the two ends of an edge alternate, starting
  // at the tail it has in the minimum. So z(tail) - z(head) is 1 if x reverses
  // the edge and 0 otherwise; with z(top) = 0 this fixes z by a graph search.
  const Vertex top = g.require_top();
  std::vector<int> z(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{top};
  seen[top] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.other_end(e, v);
      if (seen[w]) continue;
      const int d = low.bits()[e] != x.bits()[e] ? 1 : 0;
      z[w] = low.tail(e) == w ? z[v] + d : z[v] - d;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int d = low.bits()[e] != x.bits()[e] ? 1 : 0;
    if (z[low.tail(e)] - z[low.head(e)] != d) throw InternalError("flip counts inconsistent on edge " + std::to_string(e));
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (z[v] < 0) throw InternalError("negative flip count");
  }
  return ZVector{std::move(z)};
}

CLattice enumerate_lattice(const Orientation& x, std::size_t cap) {
  const Graph& g = x.graph();
  Orientation bottom = lattice_minimum(x);
  std::vector<Orientation> elems{bottom};
  std::vector<ZVector> zs{ZVector{std::vector<int>(g.vertex_count(), 0)}};
  std::unordered_map<std::string, int> seen{{bottom.key(), 0}};
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Vertex v : g.by_name()) {
      if (g.is_top(v) || g.degree(v) == 0 || !elems[i].is_source(v)) continue;
      Orientation up = elems[i];
      up.reverse_at(v);
      auto [it, inserted] = seen.emplace(up.key(), static_cast<int>(elems.size()));
      if (inserted) {
        if (elems.size() >= cap) {
          throw CapExceeded("lattice has more than " + std::to_string(cap) + " elements");
        }
        ZVector z = zs[i];
        ++z.counts[v];
        elems.push_back(std::move(up));
        zs.push_back(std::move(z));
      }
      covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  // Canonical order: by rank, then lexicographically by z over name-sorted vertices.
  std::vector<int> order(elems.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto key = [&](int i) {
    std::vector<int> k{0};
    for (Vertex v : g.by_name()) {
      k[0] += zs[i].counts[v];
      k.push_back(zs[i].counts[v]);
    }
    return k;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  CLattice out;
  for (int i : order) {
    out.elements.push_back(elems[i]);
    out.z.push_back(zs[i]);
  }
  for (auto [a, b] : covers) out.covers.emplace_back(pos[a], pos[b]);
  std::sort(out.covers.begin(), out.covers.end());
  out.covers.erase(std::unique(out.covers.begin(), out.covers.end()), out.covers.end());
  return out;
}

} // namespace flipdist
