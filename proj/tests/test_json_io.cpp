#include <doctest.h>

#include <string>

#include "srpow/json_io.hpp"

using namespace srpow;
using doctest::Contains;

namespace {

Json parse(const std::string& text) { return parse_json_text(text, "input"); }

}  // namespace

TEST_CASE("malformed JSON reports position and source") {
  CHECK_THROWS_WITH_AS(parse("{"), Contains("input:"), InputError);
  CHECK_THROWS_WITH_AS(parse("{\"r\": }"), Contains("parse error"), InputError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("complex documents") {
  const auto c = complex_from_json(parse(R"({"r":3,"facets":[[1,3],[2]]})"), "input");
  CHECK(c == SimplicialComplex::from_vertex_lists(3, {{1, 3}, {2}}));
  CHECK(complex_from_json(parse(R"({"r":2,"facets":[[]]})"), "input").is_empty_complex());

  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":2,"facets":[]})"), "input"),
                       Contains("void"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"facets":[[1]]})"), "input"),
                       Contains("missing field \"r\""), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":0,"facets":[[1]]})"), "input"),
                       Contains("ground set size"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":17,"facets":[[1]]})"), "input"),
                       Contains("ground set size"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":2,"facets":[[2,1]]})"), "input"),
                       Contains("strictly ascending"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":2,"facets":[[0]]})"), "input"),
                       Contains("out of range"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":2,"facets":[[3]]})"), "input"),
                       Contains("out of range"), InputError);
  CHECK_THROWS_WITH_AS(
      complex_from_json(parse(R"({"r":3,"facets":[[1],[1,2]]})"), "input"),
      Contains("facet {1} is contained in facet {1,2}"), InputError);
  CHECK_THROWS_WITH_AS(complex_from_json(parse(R"({"r":2,"facets":[[1],[1]]})"), "input"),
                       Contains("antichain"), InputError);
}

TEST_CASE("graph documents") {
  const auto g = graph_from_json(parse(R"({"r":3,"edges":[[1,2],[2,3]]})"), "input");
  CHECK(g == Graph::from_vertex_pairs(3, {{1, 2}, {2, 3}}));
  CHECK(graph_from_json(parse(R"({"r":2,"edges":[]})"), "input").edges().empty());

  CHECK_THROWS_WITH_AS(graph_from_json(parse(R"({"r":3,"edges":[[1]]})"), "input"),
                       Contains("exactly two"), InputError);
  CHECK_THROWS_WITH_AS(graph_from_json(parse(R"({"r":3,"edges":[[1,2,3]]})"), "input"),
                       Contains("exactly two"), InputError);
  CHECK_THROWS_WITH_AS(graph_from_json(parse(R"({"r":3,"edges":[[1,2],[1,2]]})"), "input"),
                       Contains("duplicate edge {1,2}"), InputError);
}

TEST_CASE("hypergraph documents") {
  const auto h = hypergraph_from_json(parse(R"({"r":3,"edges":[[2],[1,3]]})"), "input");
  CHECK(h == Hypergraph::from_vertex_lists(3, {{2}, {1, 3}}));
  CHECK_FALSE(hypergraph_from_json(parse(R"({"r":3,"edges":[]})"), "input").has_edges());

  CHECK_THROWS_WITH_AS(hypergraph_from_json(parse(R"({"r":3,"edges":[[]]})"), "input"),
                       Contains("nonempty"), InputError);
  CHECK_THROWS_WITH_AS(
      hypergraph_from_json(parse(R"({"r":3,"edges":[[1,2],[2]]})"), "input"),
      Contains("edge {2} is contained in edge {1,2}"), InputError);
}

TEST_CASE("ideal documents") {
  const auto I = ideal_from_json(parse(R"({"r":2,"generators":[[1,1],[2,1]]})"), "input");
  CHECK(I.generators() == std::vector<Exponents>{{1, 1}});  // minimalized on load
  CHECK(ideal_from_json(parse(R"({"r":2,"generators":[]})"), "input").is_zero());

  CHECK_THROWS_WITH_AS(ideal_from_json(parse(R"({"r":2,"generators":[[1]]})"), "input"),
                       Contains("length r = 2"), InputError);
  CHECK_THROWS_WITH_AS(ideal_from_json(parse(R"({"r":2,"generators":[[-1,0]]})"), "input"),
                       Contains("out of range"), InputError);
}

TEST_CASE("serialization round trips") {
  const auto c = SimplicialComplex::from_vertex_lists(3, {{1, 3}, {2}});
  CHECK(complex_from_json(complex_to_json(c), "roundtrip") == c);
  CHECK(complex_to_json(c).dump() == R"({"r":3,"facets":[[2],[1,3]]})");

  const auto g = Graph::from_vertex_pairs(3, {{1, 2}, {2, 3}});
  CHECK(graph_from_json(graph_to_json(g), "roundtrip") == g);

  const auto h = Hypergraph::from_vertex_lists(3, {{2}, {1, 3}});
  CHECK(hypergraph_from_json(hypergraph_to_json(h), "roundtrip") == h);

  const auto I = MonomialIdeal::from_generators(2, {{1, 1}});
  CHECK(ideal_from_json(ideal_to_json(I), "roundtrip") == I);

  const Instance inst{InstanceKind::Graph, 3, g.edges()};
  CHECK(instance_to_json(inst).dump() == R"({"kind":"graph","r":3,"edges":[[1,2],[2,3]]})");
}

TEST_CASE("empty face serializes as an empty list") {
  CHECK(vertex_list_json(0).dump() == "[]");
  CHECK(vertex_list_json(0b101).dump() == "[1,3]");
  const auto e = SimplicialComplex::empty_complex(2);
  CHECK(complex_to_json(e).dump() == R"({"r":2,"facets":[[]]})");
  CHECK(complex_from_json(complex_to_json(e), "roundtrip") == e);
}
