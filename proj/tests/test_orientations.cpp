#include "helpers.hpp"

#include "flipdist/error.hpp"
#include "flipdist/fixtures.hpp"
#include "flipdist/orientations.hpp"

#include <doctest.h>

using namespace flipdist;

namespace {

Fixture fig2() { return load_fixture("fig2"); }

// Every orientation of the graph whose out-degrees equal `alpha`, by plain enumeration.
std::vector<Orientation> all_alpha_orientations(const GraphPtr& g, const std::vector<int>& alpha) {
  std::vector<Orientation> out;
  const int m = g->edge_count();
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<std::uint8_t> bits(m);
    std::vector<int> outdeg(g->vertex_count(), 0);
    for (int e = 0; e < m; ++e) {
      bits[e] = (mask >> e) & 1UL;
      ++outdeg[bits[e] ? g->edge(e).v : g->edge(e).u];
    }
    if (outdeg == alpha) out.push_back(Orientation::from_bits(g, bits));
  }
  return out;
}

// Directed cycle test written out: support connected, every vertex in=out=1.
bool is_single_directed_cycle(const Orientation& o, const EdgeSet& c) {
  std::map<Vertex, int> in, out;
  for (EdgeId e : c) {
    ++out[o.tail(e)];
    ++in[o.head(e)];
  }
  for (auto [v, k] : out) {
    if (k != 1 || in[v] != 1) return false;
  }
  if (in.size() != out.size()) return false;
  // Follow successors from the first edge.
  std::map<Vertex, EdgeId> next;
  for (EdgeId e : c) next[o.tail(e)] = e;
  Vertex v = o.tail(*c.begin());
  std::size_t steps = 0;
  do {
    v = o.head(next[v]);
    ++steps;
  } while (v != o.tail(*c.begin()) && steps <= c.size());
  return steps == c.size();
}

} // namespace

TEST_CASE("check_alpha") {
  const Fixture f = fig2();
  const Orientation left = f.orientation("left");
  CHECK(check_alpha(left, *f.alpha));
  CHECK(check_alpha(f.orientation("right"), *f.alpha));
  Orientation bad = left;
  bad.reverse_edge(0);
  CHECK_FALSE(check_alpha(bad, *f.alpha));
  CHECK(bad.out_degree(f.graph->index("a")) == 0);

  auto empty = std::make_shared<const Graph>(Graph({}, {}));
  CHECK(check_alpha(Orientation(empty, std::vector<Vertex>{}), AlphaSpec{}));
  CHECK_THROWS_AS(check_alpha(left, AlphaSpec{{1, 1}}), ValidationError);
  CHECK_THROWS_AS(AlphaSpec::from_names(*f.graph, {{"a", 1}}), ValidationError);
}

TEST_CASE("matching_to_orientation reproduces the fig4 pair") {
  const Fixture f = load_fixture("fig4");
  const Matching m{f.graph, *f.sides, *f.matching};
  const AlphaOrientation ao = matching_to_orientation(m);
  CHECK(ao.orientation == f.orientation("left"));
  CHECK(ao.alpha.alpha[f.graph->index("c")] == 2);
  CHECK(check_alpha(ao.orientation, ao.alpha));
  CHECK(ao.alpha == *f.alpha);
  const Matching back = orientation_to_matching(ao.orientation, *f.sides);
  CHECK(back.matched == *f.matching);

  Matching missing = m;
  missing.matched = EdgeSet({0, 5, 7, 9});
  CHECK_THROWS_AS(matching_to_orientation(missing), ValidationError);
  Matching twice = m;
  twice.matched = EdgeSet({0, 1, 5, 7, 9, 11});
  CHECK_THROWS_AS(matching_to_orientation(twice), ValidationError);
}

TEST_CASE("orientation_to_matching") {
  const Fixture f = load_fixture("fig4");
  Orientation bad = f.orientation("left");
  bad.reverse_edge(1); // d gets a second out-edge
  CHECK_THROWS_AS(orientation_to_matching(bad, *f.sides), ValidationError);

  auto g = std::make_shared<const Graph>(Graph({"p", "q"}, {{"p", "q"}}));
  const Orientation o(g, std::vector<std::string>{"p"});
  const Matching m = orientation_to_matching(o, Bipartition{{0}, {1}});
  CHECK(m.matched == EdgeSet({0}));
  CHECK_THROWS_AS(orientation_to_matching(o, Bipartition{{0, 1}, {}}), ValidationError);
}

TEST_CASE("matching bijection on all perfect matchings of fig2") {
  const Fixture f = fig2();
  const std::vector<Orientation> all = all_alpha_orientations(f.graph, f.alpha->alpha);
  CHECK(all.size() == 6);
  for (const Orientation& o : all) {
    const Matching m = orientation_to_matching(o, *f.sides);
    CHECK(m.matched.size() == 5);
    CHECK(matching_to_orientation(m).orientation == o);
  }
}

TEST_CASE("flip_cycle") {
  const Fixture f = fig2();
  const Orientation left = f.orientation("left");
  const EdgeSet c({7, 8, 9, 10, 11, 12});
  const Orientation flipped = flip_cycle(left, c);
  CHECK(flipped == f.orientation("right"));
  CHECK(check_alpha(flipped, *f.alpha));
  CHECK(flip_cycle(flipped, c) == left);

  auto g = std::make_shared<const Graph>(
      Graph({"a", "b", "c", "d", "e", "f"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}}));
  const Orientation two(g, std::vector<std::string>{"a", "b", "c", "d", "e", "f"});
  CHECK_THROWS_AS(flip_cycle(two, EdgeSet({0, 1, 2, 3, 4, 5})), ValidationError);
  CHECK_NOTHROW(flip_cycle(two, EdgeSet({0, 1, 2})));
  CHECK_THROWS_AS(flip_cycle(left, EdgeSet({0, 1})), ValidationError);
  CHECK_THROWS_AS(flip_cycle(left, EdgeSet()), ValidationError);
  // Right support, wrong direction.
  CHECK_THROWS_AS(flip_cycle(left, EdgeSet({0, 1, 2, 3, 9, 8})), ValidationError);
}

TEST_CASE("difference_cycles") {
  const Fixture f = fig2();
  const auto cycles = difference_cycles(f.orientation("left"), f.orientation("right"));
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0] == EdgeSet({7, 8, 9, 10, 11, 12}));
  CHECK(difference_cycles(f.orientation("left"), f.orientation("left")).empty());

  const Fixture f3 = load_fixture("fig3");
  const auto c3 = difference_cycles(f3.orientation("x"), f3.orientation("y"));
  REQUIRE(c3.size() == 4);
  CHECK(c3[0] == EdgeSet({5, 6, 7, 8}));
  CHECK(c3[3] == EdgeSet({17, 18, 19, 20}));

  // Not Eulerian: a single reversed edge.
  Orientation one = f.orientation("left");
  one.reverse_edge(0);
  CHECK_THROWS_AS(difference_cycles(f.orientation("left"), one), ValidationError);
}

TEST_CASE("difference_cycles decomposes every pair of alpha-orientations") {
  for (const char* name : {"fig2", "fig3"}) {
    const Fixture f = load_fixture(name);
    std::vector<Orientation> all;
    if (std::string(name) == "fig2") {
      all = all_alpha_orientations(f.graph, f.alpha->alpha);
    } else {
      all = {f.orientation("x"), f.orientation("y")};
    }
    for (const Orientation& x : all) {
      for (const Orientation& y : all) {
        const auto cycles = difference_cycles(x, y);
        std::set<EdgeId> seen;
        Orientation cur = x;
        std::size_t before = x.difference(y).size();
        for (const EdgeSet& c : cycles) {
          CHECK(is_single_directed_cycle(x, c));
          for (EdgeId e : c) CHECK(seen.insert(e).second);
          cur = flip_cycle(cur, c);
          CHECK(check_alpha(cur, *f.alpha));
          const std::size_t after = cur.difference(y).size();
          CHECK(after < before);
          before = after;
        }
        CHECK(cur == y);
        CHECK(seen.size() == x.difference(y).size());
      }
    }
  }
}

TEST_CASE("dicut_size") {
  const Fixture f = fig2();
  const Graph& g = *f.graph;
  CHECK(dicut_size(g, *f.alpha, g.names_to_set({"c"})) == 2);
  VertexSet all;
  for (Vertex v = 0; v < g.vertex_count(); ++v) all.push_back(v);
  CHECK(dicut_size(g, *f.alpha, all) == 0);
  CHECK(dicut_size(g, *f.alpha, g.names_to_set({"c", "e"})) == 2);

  // The alpha-orientations of fig2 are strongly connected, so check the identity
  // on random acyclic orientations with their own out-degrees as alpha.
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const Orientation o = testref::random_pair(7, 5, rng).first;
    const Graph& h = o.graph();
    const AlphaSpec a = AlphaSpec::of(o);
    for (unsigned mask = 1; mask + 1 < (1U << h.vertex_count()); ++mask) {
      VertexSet side;
      for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (mask >> v & 1U) side.push_back(v);
      }
      int leaving = 0, entering = 0;
      for (EdgeId e = 0; e < h.edge_count(); ++e) {
        const bool tl = contains(side, o.tail(e)), hd = contains(side, o.head(e));
        leaving += (tl && !hd) ? 1 : 0;
        entering += (!tl && hd) ? 1 : 0;
      }
      if (entering != 0) continue;
      CHECK(leaving == dicut_size(h, a, side));
      ++checked;
    }
  }
  CHECK(checked > 0);
}
