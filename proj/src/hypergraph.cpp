#include "srpow/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace srpow {
namespace {

std::string set_string(Mask m) {
  std::string s = "{";
  auto vs = vertices_of(m);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph Hypergraph::from_edges(int r, std::vector<Mask> edges) {
  if (r < 0 || r > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
  Mask full = full_mask(r);
  for (Mask e : edges) {
    if (e == 0) throw std::invalid_argument("hypergraph edge must be nonempty");
    if (!is_subset(e, full)) throw std::invalid_argument("hypergraph edge outside ground set");
  }
  std::sort(edges.begin(), edges.end(), canon_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = 0; j < edges.size(); ++j)
      if (i != j && is_subset(edges[i], edges[j]))
        throw std::invalid_argument("hypergraph edges must form an antichain: edge " +
                                    set_string(edges[i]) + " is contained in edge " +
                                    set_string(edges[j]));
  Hypergraph h;
  h.r_ = r;
  h.edges_ = std::move(edges);
  return h;
}

Hypergraph Hypergraph::from_vertex_lists(int r, const std::vector<std::vector<int>>& edges) {
  std::vector<Mask> ms;
  ms.reserve(edges.size());
  for (const auto& e : edges) ms.push_back(mask_of(e, r));
  return from_edges(r, std::move(ms));
}

Mask Hypergraph::covered_vertices() const {
  Mask s = 0;
  for (Mask e : edges_) s |= e;
  return s;
}

Mask Hypergraph::neighbors(int v) const {
  Mask nb = 0;
  for (Mask e : edges_)
    if (has_vertex(e, v)) nb |= e & ~vertex_mask(v);
  return nb;
}

Hypergraph Hypergraph::dual() const {
  if (edges_.empty()) throw std::domain_error("dual of an edgeless hypergraph");
  std::vector<Mask> covers;
  Mask full = full_mask(r_);
  for (Mask m = 0;; ++m) {
    bool cover = true;
    for (Mask e : edges_)
      if ((e & m) == 0) { cover = false; break; }
    if (cover) covers.push_back(m);
    if (m == full) break;
  }
  std::vector<Mask> minimal;
  for (Mask c : covers) {
    bool min = true;
    for (Mask d : covers)
      if (d != c && is_subset(d, c)) { min = false; break; }
    if (min) minimal.push_back(c);
  }
  return from_edges(r_, std::move(minimal));
}

}  // namespace srpow
