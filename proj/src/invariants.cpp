#include "srpow/invariants.hpp"

#include <algorithm>
#include <stdexcept>

#include "srpow/takayama.hpp"

namespace srpow {
namespace {

// All matchings, grouped by size (index = number of edges).
std::vector<std::vector<std::vector<int>>> matchings_by_size(const std::vector<Mask>& edges) {
  std::vector<std::vector<std::vector<int>>> out(1);
  out[0].push_back({});
  std::vector<int> cur;
  auto grow = [&](auto&& self, int start, Mask used) -> void {
    for (int e = start; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e] & used) continue;
      cur.push_back(e);
      if (static_cast<int>(cur.size()) >= static_cast<int>(out.size())) out.emplace_back();
      out[cur.size()].push_back(cur);
      self(self, e + 1, used | edges[e]);
      cur.pop_back();
    }
  };
  grow(grow, 0, 0);
  return out;
}

bool is_induced(const Graph& g, const std::vector<int>& matching) {
  Mask verts = 0;
  for (int e : matching) verts |= g.edges()[e];
  int inside = 0;
  for (Mask e : g.edges())
    if (is_subset(e, verts)) ++inside;
  return inside == static_cast<int>(matching.size());
}

// Try every endpoint designation; for each, look for a linear order with all
// cross edges u_i v_j forward. Backtracking topological extension: an edge
// may be placed once all its predecessors (a -> b when {u_a, v_b} is an edge,
// a != b) are placed.
bool ordered_witness_for(const Graph& g, const std::vector<int>& matching,
                         std::vector<std::pair<int, int>>& witness) {
  const int s = static_cast<int>(matching.size());
  for (int des = 0; des < (1 << s); ++des) {
    std::vector<int> u(s), v(s);
    for (int k = 0; k < s; ++k) {
      auto vs = vertices_of(g.edges()[matching[k]]);
      u[k] = (des >> k & 1) ? vs[0] : vs[1];
      v[k] = (des >> k & 1) ? vs[1] : vs[0];
    }
    bool independent = true;
    for (int a = 0; a < s && independent; ++a)
      for (int b = a + 1; b < s; ++b)
        if (g.has_edge(u[a], u[b])) { independent = false; break; }
    if (!independent) continue;
    // pred[b] = set of a that must come before b
    std::vector<Mask> pred(s, 0);
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (a != b && g.has_edge(u[a], v[b])) pred[b] |= Mask{1} << a;
    std::vector<int> order;
    Mask placed = 0;
    auto extend = [&](auto&& self) -> bool {
      if (static_cast<int>(order.size()) == s) return true;
      for (int k = 0; k < s; ++k) {
        if (placed & (Mask{1} << k)) continue;
        if ((pred[k] & ~placed) != 0) continue;
        placed |= Mask{1} << k;
        order.push_back(k);
        if (self(self)) return true;
        order.pop_back();
        placed &= ~(Mask{1} << k);
      }
      return false;
    };
    if (extend(extend)) {
      witness.clear();
      for (int k : order) witness.emplace_back(u[k], v[k]);
      return true;
    }
  }
  return false;
}

}  // namespace

MatchingNumbers matching_numbers(const Graph& g) {
  MatchingNumbers out;
  auto by_size = matchings_by_size(g.edges());
  out.matching = static_cast<int>(by_size.size()) - 1;
  if (out.matching > 0)
    for (int e : by_size[out.matching].front()) out.matching_witness.push_back(g.edges()[e]);
  // Larger matchings first, stop at the first hit.
  for (int s = out.matching; s >= 1 && out.induced == 0; --s) {
    for (const auto& m : by_size[s]) {
      if (is_induced(g, m)) {
        out.induced = s;
        for (int e : m) out.induced_witness.push_back(g.edges()[e]);
        break;
      }
    }
  }
  for (int s = out.matching; s >= 1 && out.ordered == 0; --s) {
    for (const auto& m : by_size[s]) {
      std::vector<std::pair<int, int>> w;
      if (ordered_witness_for(g, m, w)) {
        out.ordered = s;
        out.ordered_witness = std::move(w);
        break;
      }
    }
  }
  return out;
}

EdgewiseDomination edgewise_domination(const Hypergraph& h) {
  if (!h.has_edges()) throw std::domain_error("edgewise domination of an edgeless hypergraph");
  const auto& edges = h.edges();
  const int m = static_cast<int>(edges.size());
  Mask covered = h.covered_vertices();
  Mask trivial = 0;
  for (Mask e : edges)
    if (popcount(e) == 1) trivial |= e;
  // Vertices that ever need a dominating neighbor.
  Mask constrained = covered & ~trivial;

  auto dominant = [&](const std::vector<int>& subset) {
    Mask u = 0;
    for (int e : subset) u |= edges[e];
    Mask need = constrained & ~u;
    for (int v : vertices_of(need))
      if ((h.neighbors(v) & u) == 0) return false;
    return true;
  };

  for (int k = 0; k <= m; ++k) {
    EdgewiseDomination result;
    bool found = false;
    for_each_combination(m, k, [&](const std::vector<int>& idx) {
      if (found) return;
      if (dominant(idx)) {
        found = true;
        result.value = k;
        for (int e : idx) result.witness.push_back(edges[e]);
      }
    });
    if (found) return result;
  }
  throw std::logic_error("the full edge set is always edgewise dominant");
}

BInvariant b_invariant(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("b-invariant needs a proper nonzero Stanley-Reisner ideal");
  const auto& facets = c.facets();
  const int t = static_cast<int>(facets.size());
  if (t > 24)
    throw std::invalid_argument("b-invariant facet subset enumeration too large");
  BInvariant best;
  best.value = -1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << t); ++s) {
    std::vector<Mask> gens;
    std::vector<int> idx;
    for (int k = 0; k < t; ++k)
      if (s & (std::uint64_t{1} << k)) {
        gens.push_back(facets[k]);
        idx.push_back(k);
      }
    SimplicialComplex sub = SimplicialComplex::from_facets(c.r(), std::move(gens));
    int reg = reg_links(sub, field) + 1;
    if (reg > best.value) {
      best.value = reg;
      best.witness = std::move(idx);
    }
  }
  return best;
}

}  // namespace srpow
