#include "flipdist/error.hpp"
#include "flipdist/fixtures.hpp"
#include "flipdist/io.hpp"

#include <filesystem>
#include <fstream>

#include <doctest.h>

using namespace flipdist;

namespace {

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "flipdist_test_io";
  std::filesystem::create_directories(dir);
  return dir;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

} // namespace

TEST_CASE("orientation round trip for every fixture") {
  for (const std::string& name : fixture_names()) {
    const Fixture f = load_fixture(name);
    for (const auto& [key, o] : f.orientations) {
      const Json j = orientation_to_json(o);
      const Orientation back = orientation_from_json(j);
      CHECK(back == o);
      CHECK(orientation_to_json(back).dump() == j.dump());
      // Sharing a known graph keeps the pointer.
      CHECK(&orientation_from_json(j, {}, f.graph).graph() == f.graph.get());
    }
  }
}

TEST_CASE("orientation with a graph path") {
  const auto dir = scratch_dir();
  const Fixture f = load_fixture("fig7");
  write(dir / "g.json", graph_to_json(*f.graph).dump());
  Json j = orientation_to_json(f.orientation("z0110"));
  j["graph"] = "g.json";
  CHECK(orientation_from_json(j, dir) == f.orientation("z0110"));
  j["graph"] = "missing.json";
  CHECK_THROWS_AS(orientation_from_json(j, dir), ValidationError);
  CHECK_THROWS_AS(read_file(dir / "nope.json"), ValidationError);
}

TEST_CASE("orientation errors") {
  const Fixture f = load_fixture("fig7");
  Json j = orientation_to_json(f.orientation("bottom"));
  Json shorter = j;
  shorter["tails"].erase(shorter["tails"].size() - 1);
  CHECK_THROWS_AS(orientation_from_json(shorter), ValidationError);
  Json stranger = j;
  stranger["tails"][0] = "zz";
  CHECK_THROWS_AS(orientation_from_json(stranger), ValidationError);
  Json not_end = j;
  not_end["tails"][0] = "f"; // edge 0 is b-top
  CHECK_THROWS_AS(orientation_from_json(not_end), ValidationError);
  Json no_tails = j;
  no_tails.erase("tails");
  CHECK_THROWS_AS(orientation_from_json(no_tails), ValidationError);
  CHECK_THROWS_AS(orientation_from_json(Json::array()), ValidationError);
}

TEST_CASE("alpha and matching round trips") {
  const Fixture f = load_fixture("fig4");
  const Json a = alpha_to_json(*f.graph, *f.alpha);
  CHECK(alpha_from_json(*f.graph, a) == *f.alpha);
  Json bad = a;
  bad["alpha"]["zz"] = 1;
  CHECK_THROWS_AS(alpha_from_json(*f.graph, bad), ValidationError);

  const Matching m{f.graph, *f.sides, *f.matching};
  const Json mj = matching_to_json(m);
  const Matching back = matching_from_json(mj);
  CHECK(back.matched == m.matched);
  CHECK(back.sides.left == m.sides.left);
  CHECK(back.sides.right == m.sides.right);
  CHECK(*back.graph == *m.graph);
  Json out_of_range = mj;
  out_of_range["matched_edge_ids"].push_back(99);
  CHECK_THROWS_AS(matching_from_json(out_of_range), ValidationError);
}

TEST_CASE("poset and matroid round trips") {
  for (const char* name : {"chain2", "antichain3"}) {
    const FinitePoset p = *load_fixture(name).poset;
    const Json j = poset_to_json(p);
    const FinitePoset back = poset_from_json(j);
    CHECK(back.elements() == p.elements());
    CHECK(back.covers() == p.covers());
  }
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements":["a"],"covers":[["a","b"]]})")), ValidationError);
  CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements":["a","b"],"covers":[["a"]]})")), ValidationError);

  const Fixture fig6 = load_fixture("fig6");
  const auto& [plus, minus] = *fig6.matroids;
  for (const PartitionMatroid* m : {&plus, &minus}) {
    const PartitionMatroid back = matroid_from_json(matroid_to_json(*m));
    CHECK(back.ground == m->ground);
    CHECK(back.class_of == m->class_of);
    CHECK(back.capacity == m->capacity);
  }
  CHECK_THROWS_AS(matroid_from_json(parse_json(R"({"ground":["x"],"classes":[],"capacities":{}})")),
                  ValidationError);
}

TEST_CASE("sequence round trip and errors") {
  const GraphPtr gp = load_fixture("fig7").graph;
  const Graph& g = *gp;
  FlipSequence f;
  f.steps.push_back(FlipStep::at_vertex(g.index("e"), FlipDirection::source_to_sink));
  f.steps.push_back(FlipStep::at_vertex(g.index("b"), FlipDirection::sink_to_source));
  f.steps.push_back(FlipStep::cycle(EdgeSet({0, 4})));
  f.steps.push_back(FlipStep::cut(g.names_to_set({"d", "e"})));
  const Json j = sequence_to_json(g, f);
  CHECK(sequence_from_json(g, j) == f);
  CHECK(j["steps"][0]["vertex"] == "e");
  CHECK(j["steps"][3]["interior"] == Json::array({"d", "e"}));

  CHECK(sequence_from_json(g, parse_json(R"({"steps":[]})")).empty());
  CHECK_THROWS_AS(sequence_from_json(g, parse_json(R"({"steps":[{"kind":"warp"}]})")), ValidationError);
  CHECK_THROWS_AS(
      sequence_from_json(g, parse_json(R"({"steps":[{"kind":"vertex","vertex":"e","direction":"up"}]})")),
      ValidationError);
  CHECK_THROWS_AS(
      sequence_from_json(g, parse_json(R"({"steps":[{"kind":"vertex","vertex":"zz","direction":"source_to_sink"}]})")),
      ValidationError);
  CHECK_THROWS_AS(sequence_from_json(g, parse_json(R"({"steps":[{"kind":"cycle","edges":[42]}]})")), ValidationError);
  CHECK_THROWS_AS(sequence_from_json(g, parse_json(R"({"steps":{}})")), ValidationError);
}

TEST_CASE("fixture bundles are stable") {
  for (const std::string& name : fixture_names()) {
    const std::string once = fixture_to_json(load_fixture(name)).dump(2);
    CHECK(fixture_to_json(load_fixture(name)).dump(2) == once);
    CHECK_FALSE(once.empty());
  }
  CHECK_THROWS_AS(load_fixture("fig99"), ValidationError);
}

TEST_CASE("parse_json") {
  CHECK(parse_json("[1,2]").size() == 2);
  CHECK_THROWS_AS(parse_json("[1,"), ValidationError);
  CHECK(edge_set_to_json(EdgeSet({3, 1})) == Json::array({1, 3}));
  const GraphPtr gp = load_fixture("fig7").graph;
  const Graph& g = *gp;
  CHECK(vertex_set_to_json(g, g.names_to_set({"f", "b"})) == Json::array({"b", "f"}));
}
