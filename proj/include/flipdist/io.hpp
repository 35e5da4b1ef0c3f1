#pragma once

#include "flipdist/flip_sequence.hpp"
#include "flipdist/graph.hpp"
#include "flipdist/orientations.hpp"
#include "flipdist/polytope.hpp"
#include "flipdist/poset.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace flipdist {

using Json = nlohmann::ordered_json;

// Throws ValidationError with the parser message on malformed input.
Json parse_json(const std::string& text);
std::string read_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

// {"vertices":[...],"edges":[{"id":0,"ends":["a","b"]}],"top":"a"}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Graph parse_graph(const std::string& text);

// {"graph": <inline graph or path>, "tails": [...]}. Relative graph paths are
// resolved against `base_dir`. When `known` is given and equal to the parsed
// graph, the orientation shares it.
Json orientation_to_json(const Orientation& o);
Orientation orientation_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                                  const GraphPtr& known = nullptr);

// {"alpha": {"a": 1, ...}}
Json alpha_to_json(const Graph& g, const AlphaSpec& a);
AlphaSpec alpha_from_json(const Graph& g, const Json& j);

// {"graph": ..., "v1": [...], "v2": [...], "matched_edge_ids": [...]}
Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                            const GraphPtr& known = nullptr);

// {"elements": [...], "covers": [["a","b"], ...]}
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

// {"ground": [...], "classes": {"e0": "v1:a"}, "capacities": {"v1:a": 1}}
Json matroid_to_json(const PartitionMatroid& m);
PartitionMatroid matroid_from_json(const Json& j);

// {"steps":[{"kind":"vertex","vertex":"e","direction":"source_to_sink"},
//           {"kind":"cycle","edges":[0,4]}, {"kind":"cut","interior":["a","b"]}]}
Json sequence_to_json(const Graph& g, const FlipSequence& f);
FlipSequence sequence_from_json(const Graph& g, const Json& j);

Json vertex_set_to_json(const Graph& g, const VertexSet& s);
Json edge_set_to_json(const EdgeSet& s);

} // namespace flipdist
