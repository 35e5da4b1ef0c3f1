#include "flipdist/polytope.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <functional>

namespace flipdist {

void PartitionMatroid::validate() const {
  std::set<std::string> seen;
  for (const auto& x : ground) {
    if (!seen.insert(x).second) throw ValidationError("duplicate ground element '" + x + "'");
    auto it = class_of.find(x);
    if (it == class_of.end()) throw ValidationError("element '" + x + "' has no class");
    if (!capacity.count(it->second)) throw ValidationError("class '" + it->second + "' has no capacity");
  }
  for (const auto& [x, c] : class_of) {
    if (!seen.count(x)) throw ValidationError("class given for unknown element '" + x + "'");
  }
  for (const auto& [c, k] : capacity) {
    if (k < 0) throw ValidationError("class '" + c + "' has negative capacity");
  }
}

bool PartitionMatroid::is_independent(const ElementSet& s) const {
  std::map<std::string, int> used;
  for (const auto& x : s) {
    auto it = class_of.find(x);
    if (it == class_of.end()) return false;
    if (++used[it->second] > capacity.at(it->second)) return false;
  }
  return true;
}

bool PartitionMatroid::is_basis(const ElementSet& s) const {
  if (!is_independent(s)) return false;
  std::map<std::string, int> size, used;
  for (const auto& x : ground) ++size[class_of.at(x)];
  for (const auto& x : s) ++used[class_of.at(x)];
  for (const auto& [c, k] : capacity) {
    if (used[c] != std::min(k, size[c])) return false;
  }
  return true;
}

namespace {

std::vector<std::string> minus(const ElementSet& a, const ElementSet& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

} // namespace

BipartiteExchange exchangeability_graph(const PartitionMatroid& m, const ElementSet& b, const ElementSet& f) {
  m.validate();
  if (!m.is_basis(b)) throw ValidationError("first set is not a basis of the matroid");
  BipartiteExchange h;
  h.left = minus(b, f);
  h.right = minus(f, b);
  for (const auto& i : h.left) {
    for (const auto& j : h.right) {
      // Same-class rule, cross-checked against the exchange definition.
      auto ci = m.class_of.find(i);
      auto cj = m.class_of.find(j);
      if (cj == m.class_of.end()) throw ValidationError("element '" + j + "' is not in the ground set");
      const bool shortcut = ci->second == cj->second;
      ElementSet swapped = b;
      swapped.erase(i);
      swapped.insert(j);
      const bool definitional = m.is_basis(swapped);
      if (shortcut != definitional) {
        throw InternalError("same-class exchange rule disagrees with the basis test on " + i + "," + j);
      }
      if (definitional) h.edges.emplace_back(i, j);
    }
  }
  return h;
}

PerfectMatchingResult unique_perfect_matching(const BipartiteExchange& h) {
  PerfectMatchingResult r;
  const int nl = static_cast<int>(h.left.size());
  const int nr = static_cast<int>(h.right.size());
  if (nl != nr) return r;
  std::map<std::string, int> li, ri;
  for (int i = 0; i < nl; ++i) li[h.left[i]] = i;
  for (int j = 0; j < nr; ++j) ri[h.right[j]] = j;
  std::vector<std::vector<int>> adj(nl);
  for (const auto& [a, b] : h.edges) adj.at(li.at(a)).push_back(ri.at(b));
  for (auto& list : adj) std::sort(list.begin(), list.end());

  std::vector<int> match_l(nl, -1), match_r(nr, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_r[v] < 0 || augment(match_r[v])) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < nl; ++u) {
    visited.assign(nr, 0);
    if (!augment(u)) return r;
  }
  for (int u = 0; u < nl; ++u) r.matching.emplace_back(h.left[u], h.right[match_l[u]]);
  std::sort(r.matching.begin(), r.matching.end());

  // Another perfect matching exists iff there is an alternating cycle: left to
  // right along unmatched edges, right to left along matched ones.
  std::vector<int> color(nl, 0);
  std::function<bool(int)> cyclic = [&](int u) {
    color[u] = 1;
    for (int v : adj[u]) {
      if (v == match_l[u]) continue;
      const int w = match_r[v];
      if (color[w] == 1) return true;
      if (color[w] == 0 && cyclic(w)) return true;
    }
    color[u] = 2;
    return false;
  };
  r.status = PerfectMatchingResult::Status::unique;
  for (int u = 0; u < nl; ++u) {
    if (color[u] == 0 && cyclic(u)) {
      r.status = PerfectMatchingResult::Status::multiple;
      break;
    }
  }
  return r;
}

AdjacencyResult polytope_adjacent(const ElementSet& a, const ElementSet& b, const PartitionMatroid& mp,
                                  const PartitionMatroid& mm) {
  mp.validate();
  mm.validate();
  if (a == b) throw ValidationError("bases must be distinct");
  if (!mp.is_basis(a) || !mm.is_basis(a)) throw ValidationError("A is not a common basis");
  if (!mp.is_basis(b) || !mm.is_basis(b)) throw ValidationError("B is not a common basis");

  AdjacencyResult r;
  const PerfectMatchingResult plus = unique_perfect_matching(exchangeability_graph(mp, a, b));
  const PerfectMatchingResult minus_ = unique_perfect_matching(exchangeability_graph(mm, b, a));
  using S = PerfectMatchingResult::Status;
  if (plus.status == S::unique) r.p_plus = plus.matching;
  if (minus_.status == S::unique) {
    std::vector<ElementPair> flipped;
    for (const auto& [x, y] : minus_.matching) flipped.emplace_back(y, x);
    std::sort(flipped.begin(), flipped.end());
    r.p_minus = flipped;
  }
  if (plus.status != S::unique) {
    r.reason = plus.status == S::none ? "G(A,B) has no perfect matching" : "G(A,B) has several perfect matchings";
    return r;
  }
  if (minus_.status != S::unique) {
    r.reason = minus_.status == S::none ? "G(B,A) has no perfect matching" : "G(B,A) has several perfect matchings";
    return r;
  }

  // Union multigraph on the symmetric difference: every vertex has degree 2 by
  // construction, so a single cycle means connected.
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [x, y] : *r.p_plus) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (const auto& [x, y] : *r.p_minus) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (const auto& [v, list] : adj) {
    if (list.size() != 2) {
      r.reason = "union of the matchings is not 2-regular";
      return r;
    }
  }
  std::set<std::string> seen{adj.begin()->first};
  std::vector<std::string> stack{adj.begin()->first};
  while (!stack.empty()) {
    std::string v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v]) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (seen.size() != adj.size()) {
    r.reason = "union of the matchings splits into several cycles";
    return r;
  }
  r.adjacent = true;
  return r;
}

std::pair<PartitionMatroid, PartitionMatroid> matching_matroids(const Graph& g, const Bipartition& sides) {
  validate_bipartition(g, sides);
  PartitionMatroid plus, minus_;
  for (Vertex v : sides.left) plus.capacity["v1:" + g.name(v)] = 1;
  for (Vertex v : sides.right) minus_.capacity["v2:" + g.name(v)] = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::string x = "e" + std::to_string(e);
    const Edge& ed = g.edge(e);
    const Vertex l = contains(sides.left, ed.u) ? ed.u : ed.v;
    const Vertex r = g.other_end(e, l);
    plus.ground.push_back(x);
    minus_.ground.push_back(x);
    plus.class_of[x] = "v1:" + g.name(l);
    minus_.class_of[x] = "v2:" + g.name(r);
  }
  return {plus, minus_};
}

ElementSet edge_elements(const EdgeSet& edges) {
  ElementSet out;
  for (EdgeId e : edges) out.insert("e" + std::to_string(e));
  return out;
}

std::pair<PartitionMatroid, PartitionMatroid> alpha_matroids(const Graph& g, const AlphaSpec& alpha) {
  if (static_cast<int>(alpha.alpha.size()) != g.vertex_count()) {
    throw ValidationError("alpha does not cover every vertex");
  }
  PartitionMatroid per_edge, per_vertex;
  for (Vertex v = 0; v < g.vertex_count(); ++v) per_vertex.capacity["out:" + g.name(v)] = alpha.alpha[v];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::string cls = "edge:" + std::to_string(e);
    per_edge.capacity[cls] = 1;
    for (Vertex t : {g.edge(e).u, g.edge(e).v}) {
      const std::string x = "e" + std::to_string(e) + ":" + g.name(t);
      per_edge.ground.push_back(x);
      per_vertex.ground.push_back(x);
      per_edge.class_of[x] = cls;
      per_vertex.class_of[x] = "out:" + g.name(t);
    }
  }
  return {per_edge, per_vertex};
}

ElementSet orientation_elements(const Orientation& o) {
  ElementSet out;
  for (EdgeId e = 0; e < o.graph().edge_count(); ++e) {
    out.insert("e" + std::to_string(e) + ":" + o.graph().name(o.tail(e)));
  }
  return out;
}

} // namespace flipdist
