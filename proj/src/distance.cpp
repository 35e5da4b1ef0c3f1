#include "flipdist/distance.hpp"

#include "flipdist/corientations.hpp"
#include "flipdist/error.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

namespace flipdist {

namespace {

std::atomic<std::size_t> g_fallbacks{0};

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// Whether `s` is a dicut of o around its interior.
bool is_dicut_of(const Orientation& o, const Dicut& s, std::string* why) {
  const Graph& g = o.graph();
  if (s.interior.empty() || static_cast<int>(s.interior.size()) >= g.vertex_count()) {
    if (why) *why = "interior must be a nonempty proper subset";
    return false;
  }
  if (g.top() && contains(s.interior, *g.top())) {
    if (why) *why = "interior contains top";
    return false;
  }
  if (!(crossing_edges(g, s.interior) == s.edges)) {
    if (why) *why = "edges are not the boundary of the interior";
    return false;
  }
  for (EdgeId e : s.edges) {
    if (contains(s.interior, o.tail(e)) != s.positive) {
      if (why) {
        *why = "edge " + g.name(o.tail(e)) + "->" + g.name(o.head(e)) + " crosses against the cut direction";
      }
      return false;
    }
  }
  return true;
}

// In-place Kahn-style sweep over the interior. Appends one step per vertex.
void sweep_interior(Orientation& cur, const Dicut& s, std::vector<FlipStep>& out) {
  const Graph& g = cur.graph();
  const bool positive = s.positive;
  // blocking[v]: incident edges pointing the wrong way for v to flip now.
  std::vector<int> blocking(g.vertex_count(), 0);
  std::vector<char> pending(g.vertex_count(), 0);
  std::set<std::pair<int, Vertex>> ready;
  for (Vertex v : s.interior) {
    pending[v] = 1;
    blocking[v] = positive ? cur.in_degree(v) : cur.out_degree(v);
    if (blocking[v] == 0) ready.emplace(g.name_rank(v), v);
  }
  const FlipDirection dir = positive ? FlipDirection::source_to_sink : FlipDirection::sink_to_source;
  std::size_t done = 0;
  while (!ready.empty()) {
    const Vertex v = ready.begin()->second;
    ready.erase(ready.begin());
    cur.reverse_at(v);
    pending[v] = 0;
    ++done;
    out.push_back(FlipStep::at_vertex(v, dir));
    for (EdgeId e : g.incident(v)) {
      const Vertex w = g.other_end(e, v);
      if (pending[w] && --blocking[w] == 0) ready.emplace(g.name_rank(w), w);
    }
  }
  if (done != s.interior.size()) {
    throw InternalError("interior sweep stalled with " + std::to_string(s.interior.size() - done) +
                        " vertices left");
  }
}

bool agrees(const Dicut& s, Sign sgn) {
  return sgn == Sign::zero || (sgn == Sign::positive) == s.positive;
}

// Sink flips while z exceeds `low`, then source flips until z reaches `high`.
FlipSequence route(const Orientation& x, const ZVector& zx, const std::vector<int>& low,
                   const std::vector<int>& high, Orientation* end) {
  const Graph& g = x.graph();
  const int n = g.vertex_count();
  Orientation cur = x;
  std::vector<int> z = zx.counts;
  FlipSequence seq;
  auto phase = [&](bool down, const std::vector<int>& goal) {
    std::set<std::pair<int, Vertex>> ready;
    auto consider = [&](Vertex v) {
      if (g.is_top(v) || g.degree(v) == 0) return;
      const bool wants = down ? z[v] > goal[v] : z[v] < goal[v];
      const bool can = down ? cur.out_degree(v) == 0 : cur.in_degree(v) == 0;
      if (wants && can) {
        ready.emplace(g.name_rank(v), v);
      } else {
        ready.erase({g.name_rank(v), v});
      }
    };
    for (Vertex v = 0; v < n; ++v) consider(v);
    while (!ready.empty()) {
      const Vertex v = ready.begin()->second;
      ready.erase(ready.begin());
      cur.reverse_at(v);
      z[v] += down ? -1 : 1;
      seq.steps.push_back(
          FlipStep::at_vertex(v, down ? FlipDirection::sink_to_source : FlipDirection::source_to_sink));
      consider(v);
      for (EdgeId e : g.incident(v)) consider(g.other_end(e, v));
    }
    if (z != goal) throw InternalError("lattice route stalled before reaching its target");
  };
  phase(true, low);
  phase(false, high);
  if (end) *end = cur;
  return seq;
}

} // namespace

int CutPoset::flips_at(Vertex v) const {
  const int c = cut_of_vertex.at(v);
  return c < 0 ? 0 : weight[c];
}

long CutPoset::total_flips() const {
  long total = 0;
  for (int c = 0; c < static_cast<int>(strict_interior.size()); ++c) {
    total += static_cast<long>(weight[c]) * static_cast<long>(strict_interior[c].size());
  }
  return total;
}

void require_distance_instance(const Orientation& x, const Orientation& y) {
  require_same_graph(x, y);
  require_c_instance(x);
  require_c_instance(y);
  if (!same_c(x, y)) throw ValidationError("orientations do not have the same cycle values (difference unbalanced)");
}

DicutFamily laminar_decompose(const Orientation& x, const Orientation& y) {
  require_distance_instance(x, y);
  const Graph& g = x.graph();
  const int n = g.vertex_count();
  const EdgeSet diff = x.difference(y);
  std::vector<char> is_diff(g.edge_count(), 0);
  for (EdgeId e : diff) is_diff[e] = 1;

  Dsu blocks(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!is_diff[e]) blocks.unite(g.edge(e).u, g.edge(e).v);
  }
  std::vector<EdgeId> remaining(diff.begin(), diff.end());

  DicutFamily family;
  std::vector<int> label(n);
  while (!remaining.empty()) {
    // Block name: smallest vertex name inside it.
    std::fill(label.begin(), label.end(), -1);
    for (Vertex v = 0; v < n; ++v) {
      const int r = blocks.find(v);
      if (label[r] < 0 || g.name_rank(v) < g.name_rank(label[r])) label[r] = v;
    }
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (EdgeId e : remaining) {
      ++outdeg[blocks.find(x.tail(e))];
      ++indeg[blocks.find(x.head(e))];
    }
    int s = -1;
    for (int r = 0; r < n; ++r) {
      if (blocks.find(r) != r || outdeg[r] == 0 || indeg[r] != 0) continue;
      if (s < 0 || g.name_rank(label[r]) < g.name_rank(label[s])) s = r;
    }
    if (s < 0) throw InternalError("difference has no source block; orientations are not acyclic");

    // Weak components of the block digraph without s.
    Dsu weak(n);
    for (EdgeId e : remaining) {
      const int a = blocks.find(x.tail(e));
      const int b = blocks.find(x.head(e));
      if (a != s && b != s) weak.unite(a, b);
    }
    std::vector<std::vector<EdgeId>> groups;
    std::vector<int> group_of(n, -1);
    std::vector<EdgeId> rest;
    for (EdgeId e : remaining) {
      if (blocks.find(x.tail(e)) != s) {
        rest.push_back(e);
        continue;
      }
      const int k = weak.find(blocks.find(x.head(e)));
      if (group_of[k] < 0) {
        group_of[k] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[group_of[k]].push_back(e);
    }
    for (auto& grp : groups) {
      Dicut cut;
      cut.edges = EdgeSet(grp);
      cut.interior = canonical_interior(g, cut.edges);
      if (cut.interior.empty()) throw InternalError("decomposition produced a cut with empty interior");
      cut.positive = contains(cut.interior, x.tail(grp.front()));
      family.cuts.push_back(std::move(cut));
    }
    for (auto& grp : groups) {
      for (EdgeId e : grp) blocks.unite(s, blocks.find(x.head(e)));
    }
    remaining = std::move(rest);
  }

  // Verification: disjoint, covering, each a dicut of x, laminar interiors.
  std::vector<int> seen(g.edge_count(), 0);
  for (const Dicut& c : family.cuts) {
    for (EdgeId e : c.edges) ++seen[e];
    std::string why;
    if (!is_dicut_of(x, c, &why)) throw InternalError("decomposed cut is not a dicut of x: " + why);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (seen[e] != (is_diff[e] ? 1 : 0)) throw InternalError("decomposition does not partition the difference");
  }
  try {
    build_cut_poset(family, g);
  } catch (const ValidationError& e) {
    throw InternalError(std::string("decomposition is not laminar: ") + e.what());
  }
  family.laminar = true;
  return family;
}

CutPoset build_cut_poset(const DicutFamily& f, const Graph& g) {
  const int k = static_cast<int>(f.cuts.size());
  for (const Dicut& c : f.cuts) {
    if (!(canonical_interior(g, c.edges) == c.interior)) {
      throw ValidationError("cut interior differs from its canonical interior");
    }
    if (c.interior.empty()) throw ValidationError("cut with empty interior");
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return f.cuts[a].interior.size() > f.cuts[b].interior.size();
  });

  CutPoset p;
  p.family = f;
  p.parent.assign(k, std::nullopt);
  p.weight.assign(k, 0);
  p.sign.assign(k, Sign::zero);
  p.strict_interior.assign(k, {});
  p.cut_of_vertex.assign(g.vertex_count(), -1);
  std::vector<int>& owner = p.cut_of_vertex;
  for (int c : order) {
    const VertexSet& in = f.cuts[c].interior;
    const int o = owner[in.front()];
    for (Vertex v : in) {
      if (owner[v] != o) throw ValidationError("cut interiors are not laminar");
    }
    if (o >= 0 && f.cuts[o].interior.size() == in.size()) {
      throw ValidationError("two cuts share the same interior");
    }
    for (Vertex v : in) owner[v] = c;
    const Dicut& s = f.cuts[c];
    if (o < 0) {
      p.weight[c] = 1;
      p.sign[c] = s.positive ? Sign::positive : Sign::negative;
      continue;
    }
    p.parent[c] = o;
    const Sign up = p.sign[o];
    p.weight[c] = p.weight[o] + (agrees(s, up) ? 1 : -1);
    if (p.weight[c] == 0) {
      p.sign[c] = Sign::zero;
    } else if (up != Sign::zero) {
      p.sign[c] = up;
    } else {
      p.sign[c] = s.positive ? Sign::positive : Sign::negative;
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (owner[v] >= 0) p.strict_interior[owner[v]].push_back(v);
  }
  p.family.laminar = true;
  return p;
}

InteriorFlips flip_interior(const Orientation& x, const Dicut& s) {
  std::string why;
  if (!is_dicut_of(x, s, &why)) throw ValidationError("not a dicut of the orientation: " + why);
  InteriorFlips out{{}, x};
  sweep_interior(out.result, s, out.sequence.steps);
  return out;
}

namespace {

// The constructive part: returns nullopt-like empty optional with a reason on anomaly.
std::optional<FlipSequence> poset_sequence(const Orientation& x, const Orientation& y, std::string& reason,
                                           std::size_t& cut_count) {
  const Graph& g = x.graph();
  DicutFamily family;
  CutPoset poset;
  try {
    family = laminar_decompose(x, y);
    poset = build_cut_poset(family, g);
  } catch (const InternalError& e) {
    reason = e.what();
    return std::nullopt;
  } catch (const ValidationError& e) {
    reason = e.what();
    return std::nullopt;
  }
  const int k = static_cast<int>(family.cuts.size());
  cut_count = static_cast<std::size_t>(k);

  // Forward: peel poset-minimal cuts, smallest interior name first.
  std::vector<int> open_children(k, 0);
  for (int c = 0; c < k; ++c) {
    if (poset.parent[c]) ++open_children[*poset.parent[c]];
  }
  auto rank_of = [&](int c) {
    int best = g.vertex_count();
    for (Vertex v : family.cuts[c].interior) best = std::min(best, g.name_rank(v));
    return best;
  };
  std::set<std::pair<int, int>> ready;
  for (int c = 0; c < k; ++c) {
    if (open_children[c] == 0) ready.emplace(rank_of(c), c);
  }
  Orientation cur = x;
  std::vector<int> order;
  std::vector<std::vector<FlipStep>> blocks;
  while (!ready.empty()) {
    const int c = ready.begin()->second;
    ready.erase(ready.begin());
    std::string why;
    if (!is_dicut_of(cur, family.cuts[c], &why)) {
      reason = "minimal cut is not a dicut of the current orientation: " + why;
      return std::nullopt;
    }
    blocks.emplace_back();
    try {
      sweep_interior(cur, family.cuts[c], blocks.back());
    } catch (const InternalError& e) {
      reason = e.what();
      return std::nullopt;
    }
    order.push_back(c);
    if (poset.parent[c] && --open_children[*poset.parent[c]] == 0) {
      ready.emplace(rank_of(*poset.parent[c]), *poset.parent[c]);
    }
  }
  if (!(cur == y)) {
    reason = "flipping every cut did not reach y";
    return std::nullopt;
  }

  // Backward: build the sequence from its end. A cut that disagrees with the sign
  // of its parent cancels each interior flip against that vertex's next flip.
  std::vector<FlipStep> rev;
  std::vector<char> alive;
  std::vector<std::vector<std::size_t>> next_of(g.vertex_count());
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    const int c = order[i];
    const bool cancel = poset.parent[c] && !agrees(family.cuts[c], poset.sign[*poset.parent[c]]);
    if (cancel) {
      for (const FlipStep& st : blocks[i]) {
        auto& stack = next_of[st.vertex];
        if (stack.empty()) {
          reason = "cancellation found no later flip at " + g.name(st.vertex);
          return std::nullopt;
        }
        alive[stack.back()] = 0;
        stack.pop_back();
      }
      continue;
    }
    for (auto it = blocks[i].rbegin(); it != blocks[i].rend(); ++it) {
      next_of[it->vertex].push_back(rev.size());
      rev.push_back(*it);
      alive.push_back(1);
    }
  }
  FlipSequence seq;
  for (std::size_t j = rev.size(); j-- > 0;) {
    if (alive[j]) seq.steps.push_back(rev[j]);
  }

  const ReplayResult r = replay(x, seq, y);
  if (!r.ok) {
    reason = "constructed sequence does not replay: " + r.message;
    return std::nullopt;
  }
  if (!is_monotone(seq)) {
    reason = "constructed sequence is not monotone";
    return std::nullopt;
  }
  if (static_cast<long>(seq.size()) != poset.total_flips()) {
    reason = "sequence length differs from the weight prediction";
    return std::nullopt;
  }
  return seq;
}

} // namespace

FlipSequence monotone_sequence(const Orientation& x, const Orientation& y, MonotoneReport* report) {
  require_distance_instance(x, y);
  std::string reason;
  std::size_t cuts = 0;
  std::optional<FlipSequence> seq = poset_sequence(x, y, reason, cuts);
  if (report) {
    report->cuts = cuts;
    report->fell_back = !seq.has_value();
    report->reason = reason;
  }
  if (seq) return *seq;
  ++g_fallbacks;
  return meet_route(x, y);
}

std::size_t monotone_fallback_count() { return g_fallbacks.load(); }

long vertex_flip_distance(const Orientation& x, const Orientation& y) {
  return static_cast<long>(monotone_sequence(x, y).size());
}

FlipSequence meet_route(const Orientation& x, const Orientation& y) {
  require_distance_instance(x, y);
  const ZVector zx = z_embedding(x);
  const ZVector zy = z_embedding(y);
  std::vector<int> low(zx.counts.size());
  for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(zx.counts[i], zy.counts[i]);
  Orientation end;
  FlipSequence seq = route(x, zx, low, zy.counts, &end);
  if (!(end == y)) throw InternalError("meet route ended away from y");
  return seq;
}

Orientation lattice_meet(const Orientation& x, const Orientation& y) {
  require_distance_instance(x, y);
  const ZVector zx = z_embedding(x);
  const ZVector zy = z_embedding(y);
  std::vector<int> low(zx.counts.size());
  for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(zx.counts[i], zy.counts[i]);
  Orientation end;
  route(x, zx, low, low, &end);
  return end;
}

Orientation lattice_join(const Orientation& x, const Orientation& y) {
  require_distance_instance(x, y);
  const ZVector zx = z_embedding(x);
  const ZVector zy = z_embedding(y);
  std::vector<int> high(zx.counts.size());
  for (std::size_t i = 0; i < high.size(); ++i) high[i] = std::max(zx.counts[i], zy.counts[i]);
  Orientation end;
  route(x, zx, zx.counts, high, &end);
  return end;
}

} // namespace flipdist
