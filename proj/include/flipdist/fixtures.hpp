#pragma once

#include "flipdist/graph.hpp"
#include "flipdist/io.hpp"
#include "flipdist/orientations.hpp"
#include "flipdist/polytope.hpp"
#include "flipdist/poset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flipdist {

// Named instances transcribed from small drawings, plus standard test digraphs.
struct Fixture {
  std::string name;
  std::string description;
  GraphPtr graph; // null for poset-only fixtures
  std::vector<std::pair<std::string, Orientation>> orientations;
  std::optional<AlphaSpec> alpha;
  std::optional<Bipartition> sides;
  std::optional<EdgeSet> matching;
  std::optional<FinitePoset> poset;
  std::optional<std::pair<PartitionMatroid, PartitionMatroid>> matroids;
  std::vector<std::pair<std::string, ElementSet>> bases;

  // Throws ValidationError if the fixture has no orientation of that name.
  const Orientation& orientation(const std::string& name) const;
  const ElementSet& basis(const std::string& name) const;
};

std::vector<std::string> fixture_names();
Fixture load_fixture(const std::string& name); // throws ValidationError on unknown names

// Everything in the fixture as one JSON document, fields in a fixed order.
Json fixture_to_json(const Fixture& f);

} // namespace flipdist
