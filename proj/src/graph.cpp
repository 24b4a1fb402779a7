#include "srpow/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace srpow {

Graph Graph::from_edges(int r, std::vector<Mask> edges) {
  if (r < 0 || r > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
  Mask full = full_mask(r);
  for (Mask e : edges) {
    if (!is_subset(e, full) || popcount(e) != 2)
      throw std::invalid_argument("graph edge must join two distinct vertices in 1..r");
  }
  std::sort(edges.begin(), edges.end(), canon_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Graph g;
  g.r_ = r;
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::from_vertex_pairs(int r, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Mask> ms;
  ms.reserve(edges.size());
  for (auto [u, v] : edges) ms.push_back(mask_of({u, v}, r));
  return from_edges(r, std::move(ms));
}

bool Graph::has_edge(int u, int v) const {
  Mask e = vertex_mask(u) | vertex_mask(v);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Mask Graph::neighbors(int v) const {
  Mask nb = 0;
  for (Mask e : edges_)
    if (has_vertex(e, v)) nb |= e & ~vertex_mask(v);
  return nb;
}

SimplicialComplex Graph::independence_complex() const {
  std::vector<Mask> independent;
  Mask full = full_mask(r_);
  for (Mask m = 0;; ++m) {
    bool ok = true;
    for (Mask e : edges_)
      if (is_subset(e, m)) { ok = false; break; }
    if (ok) independent.push_back(m);
    if (m == full) break;
  }
  return SimplicialComplex::from_facets(r_, std::move(independent));
}

}  // namespace srpow
