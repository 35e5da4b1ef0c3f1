#include "flipdist/poset.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

namespace flipdist {

namespace {

// Topological order of a relation given as successor lists; empty when cyclic.
std::vector<int> topo_order(int n, const std::vector<std::vector<int>>& succ) {
  std::vector<int> indeg(n, 0);
  for (const auto& s : succ) {
    for (int b : s) ++indeg[b];
  }
  std::vector<int> ready, order;
  for (int i = n - 1; i >= 0; --i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    int a = ready.back();
    ready.pop_back();
    order.push_back(a);
    for (int b : succ[a]) {
      if (--indeg[b] == 0) ready.push_back(b);
    }
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

std::vector<std::vector<char>> transitive_closure(int n, const std::vector<std::pair<int, int>>& rel) {
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : rel) succ[a].push_back(b);
  std::vector<int> order = topo_order(n, succ);
  if (static_cast<int>(order.size()) != n) throw ValidationError("order relation has a cycle");
  std::vector<std::vector<char>> up(n, std::vector<char>(n, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int a = *it;
    up[a][a] = 1;
    for (int b : succ[a]) {
      for (int c = 0; c < n; ++c) up[a][c] |= up[b][c];
    }
  }
  return up;
}

} // namespace

FinitePoset::FinitePoset(std::vector<std::string> elements, std::vector<std::pair<int, int>> covers)
    : elements_(std::move(elements)), covers_(std::move(covers)) {
  const int n = size();
  std::set<std::string> names(elements_.begin(), elements_.end());
  if (static_cast<int>(names.size()) != n) throw ValidationError("duplicate poset element");
  for (auto [a, b] : covers_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw ValidationError("cover references unknown element");
    if (a == b) throw ValidationError("cover relation is reflexive at '" + elements_[a] + "'");
  }
  closure_ = transitive_closure(n, covers_);
  std::set<std::pair<int, int>> distinct(covers_.begin(), covers_.end());
  if (distinct.size() != covers_.size()) throw ValidationError("duplicate cover pair");
  for (auto [a, b] : covers_) {
    for (auto [c, d] : covers_) {
      if (c == a && d != b && leq(d, b)) {
        throw ValidationError("cover " + elements_[a] + " < " + elements_[b] + " is implied transitively");
      }
    }
  }
}

FinitePoset FinitePoset::from_names(std::vector<std::string> elements,
                                    const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) idx.emplace(elements[i], i);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : covers) {
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      throw ValidationError("cover references unknown element '" + (ia == idx.end() ? a : b) + "'");
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  return FinitePoset(std::move(elements), std::move(pairs));
}

FinitePoset FinitePoset::from_relations(std::vector<std::string> elements,
                                        const std::vector<std::pair<int, int>>& less) {
  const int n = static_cast<int>(elements.size());
  auto up = transitive_closure(n, less);
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !up[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c) {
        if (c != a && c != b && up[a][c] && up[c][b]) cover = false;
      }
      if (cover) covers.emplace_back(a, b);
    }
  }
  return FinitePoset(std::move(elements), std::move(covers));
}

std::vector<int> FinitePoset::lower_covers(int x) const {
  std::vector<int> out;
  for (auto [a, b] : covers_) {
    if (b == x) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinitePoset::upper_covers(int x) const {
  std::vector<int> out;
  for (auto [a, b] : covers_) {
    if (a == x) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int FinitePoset::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i] == name) return i;
  }
  throw ValidationError("unknown poset element '" + name + "'");
}

int FinitePoset::height() const {
  const int n = size();
  if (n == 0) return 0;
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : covers_) succ[a].push_back(b);
  std::vector<int> order = topo_order(n, succ);
  std::vector<int> longest(n, 1);
  for (int a : order) {
    for (int b : succ[a]) longest[b] = std::max(longest[b], longest[a] + 1);
  }
  return *std::max_element(longest.begin(), longest.end());
}

FiniteLattice::FiniteLattice(FinitePoset poset) : poset_(std::move(poset)) {
  const int n = poset_.size();
  if (n == 0) throw ValidationError("a lattice needs at least one element");
  join_.assign(n, std::vector<int>(n, -1));
  meet_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int j = -1;
      int m = -1;
      for (int c = 0; c < n; ++c) {
        if (poset_.leq(a, c) && poset_.leq(b, c) && (j == -1 || poset_.leq(c, j))) j = c;
        if (poset_.leq(c, a) && poset_.leq(c, b) && (m == -1 || poset_.leq(m, c))) m = c;
      }
      // The candidates must be comparable to every other bound.
      for (int c = 0; c < n && j != -1; ++c) {
        if (poset_.leq(a, c) && poset_.leq(b, c) && !poset_.leq(j, c)) j = -1;
      }
      for (int c = 0; c < n && m != -1; ++c) {
        if (poset_.leq(c, a) && poset_.leq(c, b) && !poset_.leq(c, m)) m = -1;
      }
      if (j == -1 || m == -1) {
        throw ValidationError("elements '" + poset_.elements()[a] + "' and '" + poset_.elements()[b] +
                              "' lack a unique join or meet");
      }
      join_[a][b] = join_[b][a] = j;
      meet_[a][b] = meet_[b][a] = m;
    }
  }
  bottom_ = 0;
  for (int c = 0; c < n; ++c) bottom_ = meet_[bottom_][c];
}

bool FiniteLattice::is_distributive() const {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z))) return false;
      }
    }
  }
  return true;
}

FinitePoset join_irreducibles(const FiniteLattice& l) {
  const FinitePoset& p = l.poset();
  std::vector<int> members;
  for (int x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).size() == 1) members.push_back(x);
  }
  std::vector<std::string> names;
  for (int x : members) names.push_back(p.elements()[x]);
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    for (int j = 0; j < static_cast<int>(members.size()); ++j) {
      if (p.less(members[i], members[j])) less.emplace_back(i, j);
    }
  }
  return FinitePoset::from_relations(std::move(names), less);
}

FiniteLattice downset_lattice(const FinitePoset& p, std::size_t cap) {
  const int n = p.size();
  if (n > 63) throw CapExceeded("poset too large for downset enumeration");
  std::vector<std::uint64_t> below(n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y : p.lower_covers(x)) below[x] |= std::uint64_t{1} << y;
  }
  std::vector<std::uint64_t> sets{0};
  std::map<std::uint64_t, int> id{{0, 0}};
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const std::uint64_t d = sets[i];
    for (int x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((d & bit) || (below[x] & ~d)) continue;
      auto [it, inserted] = id.emplace(d | bit, static_cast<int>(sets.size()));
      if (inserted) {
        if (sets.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " downsets");
        sets.push_back(d | bit);
      }
      covers.emplace_back(static_cast<int>(i), it->second);
    }
  }
  std::vector<std::string> names;
  for (std::uint64_t d : sets) {
    std::string s = "{";
    bool first = true;
    for (int x = 0; x < n; ++x) {
      if (!(d >> x & 1U)) continue;
      if (!first) s += ",";
      s += p.elements()[x];
      first = false;
    }
    names.push_back(s + "}");
  }
  return FiniteLattice(FinitePoset(std::move(names), std::move(covers)));
}

BirkhoffDigraph birkhoff_digraph(const FiniteLattice& l) {
  if (!l.is_distributive()) throw ValidationError("lattice is not distributive");
  FinitePoset j = join_irreducibles(l);
  std::vector<std::string> names = j.elements();
  std::string top = "top";
  while (std::find(names.begin(), names.end(), top) != names.end()) top += "'";
  names.push_back(top);
  const Vertex top_index = j.size();
  std::vector<Edge> edges;
  for (auto [a, b] : j.covers()) edges.push_back({a, b});
  for (int x = 0; x < j.size(); ++x) {
    if (j.lower_covers(x).empty() || j.upper_covers(x).empty()) edges.push_back({x, top_index});
  }
  auto g = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges), top_index));
  return {g, Orientation::canonical(g)};
}

namespace {

std::vector<std::uint64_t> refine_colors(const FinitePoset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> up(n), down(n);
  for (auto [a, b] : p.covers()) {
    up[a].push_back(b);
    down[b].push_back(a);
  }
  // Initial colour: (rank from below, #below, #above).
  std::vector<int> rank(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [a, b] : p.covers()) succ[a].push_back(b);
  for (int a : topo_order(n, succ)) {
    for (int b : succ[a]) rank[b] = std::max(rank[b], rank[a] + 1);
  }
  std::vector<std::uint64_t> color(n);
  for (int x = 0; x < n; ++x) {
    int below = 0, above = 0;
    for (int y = 0; y < n; ++y) {
      below += p.less(y, x) ? 1 : 0;
      above += p.less(x, y) ? 1 : 0;
    }
    color[x] = (static_cast<std::uint64_t>(rank[x]) << 40) ^ (static_cast<std::uint64_t>(below) << 20) ^
               static_cast<std::uint64_t>(above);
  }
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  for (int round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int x = 0; x < n; ++x) {
      std::vector<std::uint64_t> u, d;
      for (int y : up[x]) u.push_back(color[y]);
      for (int y : down[x]) d.push_back(color[y]);
      std::sort(u.begin(), u.end());
      std::sort(d.begin(), d.end());
      std::uint64_t h = mix(color[x], 1);
      for (auto c : u) h = mix(h, c);
      h = mix(h, 2);
      for (auto c : d) h = mix(h, c);
      next[x] = h;
    }
    color = std::move(next);
  }
  return color;
}

} // namespace

bool isomorphic(const FinitePoset& a, const FinitePoset& b) {
  const int n = a.size();
  if (n != b.size() || a.covers().size() != b.covers().size()) return false;
  auto ca = refine_colors(a);
  auto cb = refine_colors(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::vector<char>> cover_a(n, std::vector<char>(n, 0)), cover_b = cover_a;
  for (auto [x, y] : a.covers()) cover_a[x][y] = 1;
  for (auto [x, y] : b.covers()) cover_b[x][y] = 1;
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || ca[x] != cb[y]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        ok = cover_a[z][x] == cover_b[map[z]][y] && cover_a[x][z] == cover_b[y][map[z]];
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (self(self, x + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

} // namespace flipdist
