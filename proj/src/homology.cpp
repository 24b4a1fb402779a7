#include "srpow/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace srpow {

ReducedHomology reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void()) throw std::domain_error("homology of the void complex");
  std::vector<Mask> all = c.faces();
  int d = c.dim();

  // Faces per dimension (canonical order); position index within a dimension.
  std::vector<std::vector<Mask>> by_dim(d + 2);
  for (Mask f : all) by_dim[popcount(f)].push_back(f);

  std::unordered_map<Mask, int> pos;
  std::vector<int> ranks(d + 2, 0);  // ranks[k] = rank of boundary C_{k-1} -> C_{k-2}

  for (int k = 1; k <= d + 1; ++k) {
    const auto& rows = by_dim[k - 1];
    const auto& cols = by_dim[k];
    if (cols.empty()) continue;
    pos.clear();
    for (size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
    std::vector<std::int64_t> m(rows.size() * cols.size(), 0);
    for (size_t j = 0; j < cols.size(); ++j) {
      Mask f = cols[j];
      auto vs = vertices_of(f);
      for (size_t t = 0; t < vs.size(); ++t) {
        Mask g = f & ~vertex_mask(vs[t]);
        int i = pos.at(g);
        m[static_cast<size_t>(i) * cols.size() + j] = (t % 2 == 0) ? 1 : -1;
      }
    }
    ranks[k] = rank_int(m, static_cast<int>(rows.size()), static_cast<int>(cols.size()), field);
  }

  ReducedHomology h;
  h.dims.assign(d + 2, 0);
  for (int i = -1; i <= d; ++i) {
    long fi = static_cast<long>(by_dim[i + 1].size());
    long lower = ranks[i + 1];                        // rank of d_i
    long upper = (i + 2 <= d + 1) ? ranks[i + 2] : 0;  // rank of d_{i+1}
    h.dims[i + 1] = fi - lower - upper;
  }
  return h;
}

namespace {

struct KeyHash {
  size_t operator()(const std::vector<Mask>& k) const {
    size_t h = 0xcbf29ce484222325ull;
    for (Mask m : k) {
      h ^= m;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Relabel the vertex support order-preservingly onto {1..s} so that complexes
// differing only by unused ground vertices share a cache entry.
std::vector<Mask> cache_key(const SimplicialComplex& c, const FieldSpec& field) {
  Mask sup = c.vertex_support();
  std::vector<int> newbit(kMaxGroundSet, 0);
  int s = 0;
  for (int v = 0; v < c.r(); ++v)
    if (sup & (Mask{1} << v)) newbit[v] = s++;
  std::vector<Mask> key;
  key.reserve(c.facets().size() + 1);
  key.push_back(static_cast<Mask>(field.characteristic));
  for (Mask f : c.facets()) {
    Mask m = 0;
    for (int v = 0; v < c.r(); ++v)
      if (f & (Mask{1} << v)) m |= Mask{1} << newbit[v];
    key.push_back(m);
  }
  return key;
}

}  // namespace

ReducedHomology reduced_homology_cached(const SimplicialComplex& c, const FieldSpec& field) {
  thread_local std::unordered_map<std::vector<Mask>, ReducedHomology, KeyHash> cache;
  if (cache.size() > 4'000'000) cache.clear();
  auto key = cache_key(c, field);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Mask sup = c.vertex_support();
  int s = popcount(sup);
  std::vector<Mask> facets(key.begin() + 1, key.end());
  ReducedHomology h = reduced_homology(SimplicialComplex::from_facets(s, std::move(facets)), field);
  return cache.emplace(std::move(key), std::move(h)).first->second;
}

}  // namespace srpow
