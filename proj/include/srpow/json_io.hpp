#pragma once

#include <string>

#include "json.hpp"
#include "srpow/complex.hpp"
#include "srpow/enumerate.hpp"
#include "srpow/graph.hpp"
#include "srpow/hypergraph.hpp"
#include "srpow/ideal.hpp"

namespace srpow {

using Json = nlohmann::json;
// Insertion-ordered objects keep report fields in a fixed position, which the
// byte-identical-rerun contract depends on.
using OrderedJson = nlohmann::ordered_json;

// Thrown for malformed or semantically invalid input documents; the message
// carries the source name and the offending location.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text, const std::string& source_name);
Json load_json_file(const std::string& path);

// {"r": 3, "facets": [[1,3],[2]]}.  Facet lists must be strictly ascending,
// in range, and an antichain; the void complex (empty facet list) is rejected
// as input.  [[]] denotes the complex whose only face is the empty set.
SimplicialComplex complex_from_json(const Json& doc, const std::string& source_name);

// {"r": 3, "edges": [[1,2],[2,3]]} with 2-element edges, duplicate-free.
Graph graph_from_json(const Json& doc, const std::string& source_name);

// {"r": 3, "edges": [[2],[1,3]]}: nonempty edges forming an antichain.
Hypergraph hypergraph_from_json(const Json& doc, const std::string& source_name);

// {"r": 3, "generators": [[1,1,0],[0,1,1]]}: exponent vectors of length r;
// the list is minimalized on load.
MonomialIdeal ideal_from_json(const Json& doc, const std::string& source_name);

OrderedJson complex_to_json(const SimplicialComplex& c);
OrderedJson graph_to_json(const Graph& g);
OrderedJson hypergraph_to_json(const Hypergraph& h);
OrderedJson ideal_to_json(const MonomialIdeal& I);
OrderedJson instance_to_json(const Instance& inst);

OrderedJson vertex_list_json(Mask m);

}  // namespace srpow
