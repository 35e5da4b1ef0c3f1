#include "flipdist/generators.hpp"

#include "flipdist/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace flipdist {

Orientation grid_instance(int rows, int cols) {
  if (rows < 1 || cols < 1 || rows > 999 || cols > 999) throw ValidationError("grid dimensions must be in 1..999");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(rows) * cols);
  char buf[16];
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::snprintf(buf, sizeof buf, "v%03d_%03d", r, c);
      names.emplace_back(buf);
    }
  }
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Edge> edges;
  std::vector<Vertex> tails;
  // Tail is the end farther from the corner.
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        edges.push_back({id(r, c), id(r, c + 1)});
        tails.push_back(id(r, c + 1));
      }
      if (r + 1 < rows) {
        edges.push_back({id(r, c), id(r + 1, c)});
        tails.push_back(id(r + 1, c));
      }
    }
  }
  auto g = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges), 0));
  return Orientation(g, tails);
}

Orientation random_flip_walk(const Orientation& start, long steps, std::mt19937_64& rng) {
  const Graph& g = start.graph();
  Orientation cur = start;
  if (g.vertex_count() == 0) return cur;
  std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
  for (long i = 0; i < steps; ++i) {
    const Vertex v = pick(rng);
    if (g.is_top(v) || g.degree(v) == 0) continue;
    if (cur.is_source(v) || cur.is_sink(v)) cur.reverse_at(v);
  }
  return cur;
}

Orientation random_c_instance(int n, int extra, std::mt19937_64& rng) {
  if (n < 1) throw ValidationError("need at least one vertex");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    edges.push_back({parent(rng), i});
  }
  if (n >= 2) {
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int k = 0; k < extra; ++k) {
      const int a = any(rng);
      int b = any(rng);
      while (b == a) b = any(rng);
      edges.push_back({a, b});
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<Vertex> tails;
  for (const Edge& e : edges) tails.push_back(pos[e.u] < pos[e.v] ? e.u : e.v);
  auto g = std::make_shared<const Graph>(Graph::from_indices(std::move(names), std::move(edges), 0));
  return Orientation(g, tails);
}

FinitePoset random_height2_poset(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5), edge(p);
  std::vector<std::string> names;
  std::vector<char> upper(n);
  for (int i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    upper[i] = coin(rng) ? 1 : 0;
  }
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!upper[i] && upper[j] && edge(rng)) covers.emplace_back(i, j);
    }
  }
  return FinitePoset(std::move(names), std::move(covers));
}

FinitePoset random_poset(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) less.emplace_back(i, j);
    }
  }
  return FinitePoset::from_relations(std::move(names), less);
}

} // namespace flipdist
