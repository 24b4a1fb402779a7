#pragma once

#include <utility>
#include <vector>

#include "srpow/bits.hpp"
#include "srpow/complex.hpp"

namespace srpow {

// Finite simple graph on {1..r}; edges stored as 2-element masks in canonical
// order. Isolated vertices are just ground elements in no edge.
class Graph {
 public:
  Graph() = default;
  static Graph from_edges(int r, std::vector<Mask> edges);
  static Graph from_vertex_pairs(int r, const std::vector<std::pair<int, int>>& edges);

  int r() const { return r_; }
  const std::vector<Mask>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  Mask neighbors(int v) const;

  // Independent sets of the graph; facets are the maximal independent sets.
  SimplicialComplex independence_complex() const;

  bool operator==(const Graph&) const = default;

 private:
  int r_ = 0;
  std::vector<Mask> edges_;
};

}  // namespace srpow
