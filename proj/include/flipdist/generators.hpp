#pragma once

#include "flipdist/graph.hpp"
#include "flipdist/poset.hpp"

#include <cstdint>
#include <random>

namespace flipdist {

// R x C grid; vertices "v<row>_<col>" zero-padded so names sort row-major, top at
// v000_000. Every edge points towards the top corner.
Orientation grid_instance(int rows, int cols);

// Random walk of `steps` attempted vertex flips (sources and sinks other than top).
Orientation random_flip_walk(const Orientation& start, long steps, std::mt19937_64& rng);

// Connected graph on n vertices "v0".."v<n-1>" (top "v0"): random spanning tree
// plus `extra` random edges (parallel edges allowed), oriented along a random
// vertex order.
Orientation random_c_instance(int n, int extra, std::mt19937_64& rng);

// Height <= 2 poset on "p0".."p<n-1>": each element lands on the lower or upper
// level with equal odds, and each lower/upper pair is a cover with probability p.
FinitePoset random_height2_poset(int n, double p, std::uint64_t seed);

// Poset from a random DAG on "p0".."p<n-1>": each pair i < j is related with probability p.
FinitePoset random_poset(int n, double p, std::uint64_t seed);

} // namespace flipdist
