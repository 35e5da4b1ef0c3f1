#include "helpers.hpp"

#include "flipdist/distance.hpp"
#include "flipdist/error.hpp"
#include "flipdist/fixtures.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/orientations.hpp"

#include <cstdlib>
#include <deque>

#include <doctest.h>

using namespace flipdist;

namespace {

const Fixture& fixture(const std::string& name) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_fixture(name)).first;
  return it->second;
}

// Directed cycles are the undirected cycles that o traverses all one way.
std::vector<EdgeSet> brute_directed_cycles(const Orientation& o) {
  std::vector<EdgeSet> out;
  for (const testref::Walk& w : testref::undirected_cycles(o.graph())) {
    const int f = testref::forward_count(o, w);
    if (f != 0 && f != static_cast<int>(w.size())) continue;
    std::vector<EdgeId> ids;
    for (auto [e, dir] : w) ids.push_back(e);
    out.emplace_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal dicuts with interior size <= k, by testing every vertex subset.
std::vector<Orientation> brute_cut_neighbors(const Orientation& o, int k) {
  const Graph& g = o.graph();
  std::vector<Orientation> out;
  for (unsigned mask = 1; mask < (1U << g.vertex_count()); ++mask) {
    if (mask >> g.require_top() & 1U) continue;
    if (__builtin_popcount(mask) > k) continue;
    std::vector<Vertex> side;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (mask >> v & 1U) side.push_back(v);
    }
    const VertexSet s = make_vertex_set(side);
    if (!induces_connected(g, s) || !induces_connected(g, complement(g, s))) continue;
    int leaving = 0, entering = 0;
    std::vector<EdgeId> cut;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const bool t = mask >> o.tail(e) & 1U, h = mask >> o.head(e) & 1U;
      if (t == h) continue;
      cut.push_back(e);
      (t ? leaving : entering)++;
    }
    if (cut.empty() || (leaving && entering)) continue;
    out.push_back(o.with_reversed(cut));
  }
  return out;
}

template <class Next>
std::optional<long> brute_bfs(const Orientation& x, const Orientation& y, Next next) {
  std::map<std::vector<std::uint8_t>, long> dist{{x.bits(), 0}};
  std::deque<Orientation> q{x};
  while (!q.empty()) {
    const Orientation o = q.front();
    q.pop_front();
    if (o == y) return dist[o.bits()];
    for (const Orientation& n : next(o)) {
      if (dist.emplace(n.bits(), dist[o.bits()] + 1).second) q.push_back(n);
    }
  }
  return std::nullopt;
}

Orientation random_orientation(int n, int extra, std::mt19937_64& rng) {
  Orientation x = random_c_instance(n, extra, rng);
  std::bernoulli_distribution coin(0.5);
  for (EdgeId e = 0; e < x.graph().edge_count(); ++e) {
    if (coin(rng)) x.reverse_edge(e);
  }
  return x;
}

} // namespace

TEST_CASE("enumerate_simple_directed_cycles") {
  CHECK(enumerate_simple_directed_cycles(fixture("fig7").orientation("bottom"), 100).empty());
  auto g = std::make_shared<const Graph>(Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  const Orientation tri(g, std::vector<std::string>{"a", "b", "c"});
  CHECK(enumerate_simple_directed_cycles(tri, 10) == std::vector<EdgeSet>{EdgeSet({0, 1, 2})});

  const Orientation left = fixture("fig2").orientation("left");
  const auto cycles = enumerate_simple_directed_cycles(left, 10000);
  CHECK(cycles == brute_directed_cycles(left));
  CHECK(cycles.size() == 5); // regression value, confirmed by the exhaustive count above
  CHECK_THROWS_AS(enumerate_simple_directed_cycles(left, 1), CapExceeded);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const Orientation o = random_orientation(4 + t % 4, 2 + t % 5, rng);
    CHECK(enumerate_simple_directed_cycles(o, 100000) == brute_directed_cycles(o));
  }
}

TEST_CASE("flip_neighbors on fig7") {
  const Orientation bottom = fixture("fig7").orientation("bottom");
  const auto v = flip_neighbors(bottom, FlipMode::vertex());
  REQUIRE(v.size() == 1);
  CHECK(v[0].result == fixture("fig7").orientation("z0010"));
  CHECK(v[0].step == FlipStep::at_vertex(bottom.graph().index("e"), FlipDirection::source_to_sink));
  const auto c = flip_neighbors(bottom, FlipMode::cut_bounded(1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].result == v[0].result);
  CHECK(flip_neighbors(bottom, FlipMode::cycle()).empty());
  // The top orientation has a single downward vertex flip.
  CHECK(flip_neighbors(fixture("fig7").orientation("top"), FlipMode::vertex()).size() == 1);
}

TEST_CASE("mode parsing and validation") {
  CHECK(parse_mode("cycle").kind == FlipModeKind::cycle);
  CHECK(parse_mode("cycle-restricted").kind == FlipModeKind::cycle_restricted);
  CHECK(parse_mode("vertex").kind == FlipModeKind::vertex);
  const FlipMode c3 = parse_mode("cut-3");
  CHECK(c3.kind == FlipModeKind::cut_bounded);
  CHECK(c3.k == 3);
  CHECK(c3.name() == "cut-3");
  CHECK_THROWS_AS(parse_mode("cut-0"), ValidationError);
  CHECK_THROWS_AS(parse_mode("cut-x"), ValidationError);
  CHECK_THROWS_AS(parse_mode("sideways"), ValidationError);
  FlipMode r{FlipModeKind::cycle_restricted, std::nullopt, 0};
  CHECK_THROWS_AS(r.validate(), ValidationError);
}

TEST_CASE("caps parsing") {
  const OracleCaps c = OracleCaps::parse("states=10,cycles=5");
  CHECK(c.states == 10);
  CHECK(c.cycles == 5);
  const OracleCaps d = OracleCaps::parse("cycles=7", c);
  CHECK(d.states == 10);
  CHECK(d.cycles == 7);
  CHECK(OracleCaps::parse("").states == OracleCaps{}.states);
  CHECK_THROWS_AS(OracleCaps::parse("states=abc"), ValidationError);
  CHECK_THROWS_AS(OracleCaps::parse("bogus=1"), ValidationError);
  CHECK_THROWS_AS(OracleCaps::parse("states"), ValidationError);

  ::setenv("FLIPDIST_CAPS", "states=123", 1);
  CHECK(OracleCaps::from_env().states == 123);
  CHECK(OracleCaps::from_env().cycles == OracleCaps{}.cycles);
  ::unsetenv("FLIPDIST_CAPS");
  CHECK(OracleCaps::from_env().states == OracleCaps{}.states);
}

TEST_CASE("bfs_distance on fixtures") {
  const Orientation x = fixture("fig3").orientation("x");
  const Orientation y = fixture("fig3").orientation("y");
  const OracleResult free = bfs_distance(x, y, FlipMode::cycle());
  REQUIRE(free.distance);
  // The exact value on this transcription; the drawing only promises at most 3.
  CHECK(*free.distance == 2);
  CHECK(verify_sequence(x, free.witness, y));
  const OracleResult restricted = bfs_distance(x, y, FlipMode::cycle_restricted(y));
  REQUIRE(restricted.distance);
  CHECK(*restricted.distance == 4);
  CHECK(verify_sequence(x, restricted.witness, y));
  for (const FlipStep& s : restricted.witness.steps) {
    for (EdgeId e : s.edges) CHECK(x.difference(y).contains(e));
  }

  const Orientation b = fixture("fig7").orientation("bottom");
  const Orientation t = fixture("fig7").orientation("top");
  const OracleResult v = bfs_distance(b, t, FlipMode::vertex());
  CHECK(v.distance == std::optional<long>(4));
  CHECK(verify_sequence(b, v.witness, t));
  for (FlipMode m : {FlipMode::vertex(), FlipMode::cycle(), FlipMode::cut_bounded(2)}) {
    const OracleResult z = bfs_distance(b, b, m);
    CHECK(z.distance == std::optional<long>(0));
    CHECK(z.witness.empty());
  }

  const OracleResult limited = bfs_distance(b, t, FlipMode::vertex(), {}, 2);
  CHECK_FALSE(limited.distance);
  CHECK(limited.depth_limited);
  OracleCaps tiny;
  tiny.states = 2;
  CHECK_THROWS_AS(bfs_distance(b, t, FlipMode::vertex(), tiny), CapExceeded);
  // Not reachable by cycle flips from an acyclic start.
  CHECK_FALSE(bfs_distance(b, t, FlipMode::cycle()).distance);
}

TEST_CASE("explore_flip_graph on fig2") {
  const FlipGraph fg = explore_flip_graph(fixture("fig2").orientation("left"), FlipMode::cycle());
  CHECK(fg.states.size() == 6);
  CHECK(fg.edges.size() == 13);
  for (auto [i, j] : fg.edges) CHECK(i < j);
  for (const Orientation& o : fg.states) CHECK(check_alpha(o, *fixture("fig2").alpha));
}

TEST_CASE("cycle modes agree with a plain search") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 50; ++t) {
    const Orientation x = random_orientation(4 + t % 3, 2 + t % 4, rng);
    const FlipGraph fg = explore_flip_graph(x, FlipMode::cycle());
    const Orientation& y = fg.states[rng() % fg.states.size()];
    auto next = [](const Orientation& o) {
      std::vector<Orientation> out;
      for (const EdgeSet& c : brute_directed_cycles(o)) out.push_back(o.with_reversed(c.ids()));
      return out;
    };
    const OracleResult r = bfs_distance(x, y, FlipMode::cycle());
    CHECK(r.distance == brute_bfs(x, y, next));
    const OracleResult rr = bfs_distance(x, y, FlipMode::cycle_restricted(y));
    REQUIRE(rr.distance);
    CHECK(*r.distance <= *rr.distance);
    CHECK(verify_sequence(x, rr.witness, y));
  }
}

TEST_CASE("restricted distance counts symmetric-difference cycles on matchings") {
  const Fixture& f = fixture("fig2");
  const FlipGraph fg = explore_flip_graph(f.orientation("left"), FlipMode::cycle());
  for (const Orientation& x : fg.states) {
    for (const Orientation& y : fg.states) {
      const OracleResult r = bfs_distance(x, y, FlipMode::cycle_restricted(y));
      REQUIRE(r.distance);
      CHECK(*r.distance == static_cast<long>(difference_cycles(x, y).size()));
      CHECK(*bfs_distance(x, y, FlipMode::cycle()).distance <= *r.distance);
    }
  }
}

TEST_CASE("vertex and cut modes agree with plain searches") {
  std::mt19937_64 rng(123);
  for (int t = 0; t < 80; ++t) {
    const auto [x, y] = testref::random_pair(2 + t % 7, t % 4, rng);
    const auto ball = testref::vertex_flip_ball(x);
    const OracleResult v = bfs_distance(x, y, FlipMode::vertex());
    REQUIRE(v.distance);
    CHECK(*v.distance == ball.at(y.bits()));
    CHECK(*v.distance == vertex_flip_distance(x, y));
    const int k = 1 + t % 3;
    const OracleResult c = bfs_distance(x, y, FlipMode::cut_bounded(k));
    CHECK(c.distance == brute_bfs(x, y, [k](const Orientation& o) { return brute_cut_neighbors(o, k); }));
    if (c.distance) CHECK(verify_sequence(x, c.witness, y));
  }
}
