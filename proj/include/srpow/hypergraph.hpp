#pragma once

#include <vector>

#include "srpow/bits.hpp"

namespace srpow {

// Simple hypergraph on {1..r}: an antichain of nonempty edges. Trivial
// (singleton) edges are allowed, as are vertices in no edge.
class Hypergraph {
 public:
  Hypergraph() = default;
  static Hypergraph from_edges(int r, std::vector<Mask> edges);
  static Hypergraph from_vertex_lists(int r, const std::vector<std::vector<int>>& edges);

  int r() const { return r_; }
  const std::vector<Mask>& edges() const { return edges_; }
  bool has_edges() const { return !edges_.empty(); }

  Mask covered_vertices() const;  // union of all edges
  bool is_trivial_edge(Mask e) const { return popcount(e) == 1; }

  // v and w adjacent iff some edge contains both.
  Mask neighbors(int v) const;

  // Edges = minimal vertex covers (minimal transversals). Rejects edgeless.
  Hypergraph dual() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int r_ = 0;
  std::vector<Mask> edges_;
};

}  // namespace srpow
