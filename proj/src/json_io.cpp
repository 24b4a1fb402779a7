#include "srpow/json_io.hpp"

#include <fstream>
#include <sstream>

namespace srpow {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where,
                       const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

int require_r(const Json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "$", "expected a JSON object");
  if (!doc.contains("r")) fail(source, "$", "missing field \"r\"");
  const Json& jr = doc.at("r");
  if (!jr.is_number_integer()) fail(source, "r", "expected an integer");
  const long long r = jr.get<long long>();
  if (r < 1 || r > kMaxGroundSet)
    fail(source, "r", "ground set size must be in 1.." + std::to_string(kMaxGroundSet));
  return static_cast<int>(r);
}

const Json& require_array(const Json& doc, const char* field, const std::string& source) {
  if (!doc.contains(field)) fail(source, "$", std::string("missing field \"") + field + "\"");
  const Json& arr = doc.at(field);
  if (!arr.is_array()) fail(source, field, "expected an array");
  return arr;
}

std::string set_string(Mask m) {
  std::string s = "{";
  auto vs = vertices_of(m);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

// Reads one vertex list (strictly ascending, 1-based, within [r]) at
// field[index] and returns its mask.
Mask read_vertex_set(const Json& entry, int r, const std::string& source,
                     const std::string& where) {
  if (!entry.is_array()) fail(source, where, "expected an array of vertices");
  Mask m = 0;
  long long prev = 0;
  for (std::size_t k = 0; k < entry.size(); ++k) {
    const Json& jv = entry[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!jv.is_number_integer()) fail(source, at, "expected an integer vertex");
    const long long v = jv.get<long long>();
    if (v < 1 || v > r)
      fail(source, at, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(r));
    if (v <= prev)
      fail(source, at, "vertices must be strictly ascending");
    prev = v;
    m |= vertex_mask(static_cast<int>(v));
  }
  return m;
}

void reject_non_antichain(const std::vector<Mask>& sets, const std::string& source,
                          const char* field, const char* noun) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && is_subset(sets[i], sets[j]))
        fail(source, field,
             std::string(noun) + "s must form an antichain: " + noun + " " +
                 set_string(sets[i]) + " is contained in " + noun + " " + set_string(sets[j]));
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source_name) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source_name + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

SimplicialComplex complex_from_json(const Json& doc, const std::string& source) {
  const int r = require_r(doc, source);
  const Json& arr = require_array(doc, "facets", source);
  if (arr.empty())
    fail(source, "facets", "the void complex (no facets) is not accepted as input");
  std::vector<Mask> facets;
  for (std::size_t k = 0; k < arr.size(); ++k)
    facets.push_back(read_vertex_set(arr[k], r, source, "facets[" + std::to_string(k) + "]"));
  reject_non_antichain(facets, source, "facets", "facet");
  return SimplicialComplex::from_facets(r, facets);
}

Graph graph_from_json(const Json& doc, const std::string& source) {
  const int r = require_r(doc, source);
  const Json& arr = require_array(doc, "edges", source);
  std::vector<Mask> edges;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Mask e = read_vertex_set(arr[k], r, source, where);
    if (popcount(e) != 2) fail(source, where, "a graph edge needs exactly two distinct vertices");
    for (Mask seen : edges)
      if (seen == e) fail(source, where, "duplicate edge " + set_string(e));
    edges.push_back(e);
  }
  return Graph::from_edges(r, edges);
}

Hypergraph hypergraph_from_json(const Json& doc, const std::string& source) {
  const int r = require_r(doc, source);
  const Json& arr = require_array(doc, "edges", source);
  std::vector<Mask> edges;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Mask e = read_vertex_set(arr[k], r, source, where);
    if (e == 0) fail(source, where, "hypergraph edges must be nonempty");
    for (Mask seen : edges)
      if (seen == e) fail(source, where, "duplicate edge " + set_string(e));
    edges.push_back(e);
  }
  reject_non_antichain(edges, source, "edges", "edge");
  return Hypergraph::from_edges(r, edges);
}

MonomialIdeal ideal_from_json(const Json& doc, const std::string& source) {
  const int r = require_r(doc, source);
  const Json& arr = require_array(doc, "generators", source);
  std::vector<Exponents> gens;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "generators[" + std::to_string(k) + "]";
    const Json& entry = arr[k];
    if (!entry.is_array()) fail(source, where, "expected an exponent vector");
    if (entry.size() != static_cast<std::size_t>(r))
      fail(source, where, "exponent vector must have length r = " + std::to_string(r));
    Exponents e(static_cast<std::size_t>(r));
    for (std::size_t i = 0; i < entry.size(); ++i) {
      const Json& jv = entry[i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!jv.is_number_integer()) fail(source, at, "expected an integer exponent");
      const long long v = jv.get<long long>();
      if (v < 0 || v > 1000000) fail(source, at, "exponent out of range 0..1000000");
      e[i] = static_cast<int>(v);
    }
    gens.push_back(e);
  }
  return MonomialIdeal::from_generators(r, gens);
}

OrderedJson vertex_list_json(Mask m) {
  OrderedJson arr = OrderedJson::array();
  for (int v : vertices_of(m)) arr.push_back(v);
  return arr;
}

OrderedJson complex_to_json(const SimplicialComplex& c) {
  OrderedJson doc;
  doc["r"] = c.r();
  OrderedJson facets = OrderedJson::array();
  for (Mask f : c.facets()) facets.push_back(vertex_list_json(f));
  doc["facets"] = facets;
  return doc;
}

OrderedJson graph_to_json(const Graph& g) {
  OrderedJson doc;
  doc["r"] = g.r();
  OrderedJson edges = OrderedJson::array();
  for (Mask e : g.edges()) edges.push_back(vertex_list_json(e));
  doc["edges"] = edges;
  return doc;
}

OrderedJson hypergraph_to_json(const Hypergraph& h) {
  OrderedJson doc;
  doc["r"] = h.r();
  OrderedJson edges = OrderedJson::array();
  for (Mask e : h.edges()) edges.push_back(vertex_list_json(e));
  doc["edges"] = edges;
  return doc;
}

OrderedJson ideal_to_json(const MonomialIdeal& I) {
  OrderedJson doc;
  doc["r"] = I.r();
  OrderedJson gens = OrderedJson::array();
  for (const Exponents& e : I.generators()) gens.push_back(e);
  doc["generators"] = gens;
  return doc;
}

OrderedJson instance_to_json(const Instance& inst) {
  OrderedJson doc;
  doc["kind"] = to_string(inst.kind);
  doc["r"] = inst.r;
  OrderedJson sets = OrderedJson::array();
  for (Mask m : inst.sets) sets.push_back(vertex_list_json(m));
  doc[inst.kind == InstanceKind::Complex ? "facets" : "edges"] = sets;
  return doc;
}

}  // namespace srpow
