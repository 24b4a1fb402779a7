#include "srpow/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srpow {

SimplicialComplex SimplicialComplex::from_facets(int r, std::vector<Mask> gens) {
  if (r < 0 || r > kMaxGroundSet) throw std::invalid_argument("ground set size out of range");
  Mask full = full_mask(r);
  for (Mask g : gens)
    if (!is_subset(g, full)) throw std::invalid_argument("facet outside ground set");
  SimplicialComplex c;
  c.r_ = r;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Mask g : gens) {
    bool maximal = true;
    for (Mask h : gens)
      if (h != g && is_subset(g, h)) { maximal = false; break; }
    if (maximal) c.facets_.push_back(g);
  }
  std::sort(c.facets_.begin(), c.facets_.end(), canon_less);
  return c;
}

SimplicialComplex SimplicialComplex::from_vertex_lists(int r,
                                                       const std::vector<std::vector<int>>& facets) {
  std::vector<Mask> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) gens.push_back(mask_of(f, r));
  return from_facets(r, std::move(gens));
}

SimplicialComplex SimplicialComplex::full_simplex(int r) {
  return from_facets(r, {full_mask(r)});
}

SimplicialComplex SimplicialComplex::empty_complex(int r) { return from_facets(r, {Mask{0}}); }

SimplicialComplex SimplicialComplex::void_complex(int r) { return from_facets(r, {}); }

int SimplicialComplex::dim() const {
  if (is_void()) throw std::domain_error("dimension of the void complex");
  int d = -1;
  for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
  return d;
}

bool SimplicialComplex::contains_face(Mask f) const {
  for (Mask g : facets_)
    if (is_subset(f, g)) return true;
  return false;
}

Mask SimplicialComplex::vertex_support() const {
  Mask s = 0;
  for (Mask f : facets_) s |= f;
  return s;
}

std::vector<Mask> SimplicialComplex::faces() const {
  if (is_void()) throw std::domain_error("faces of the void complex");
  std::vector<bool> seen(size_t{1} << r_, false);
  std::vector<Mask> out;
  for (Mask f : facets_)
    for_each_submask(f, [&](Mask s) {
      if (!seen[s]) {
        seen[s] = true;
        out.push_back(s);
      }
    });
  std::sort(out.begin(), out.end(), canon_less);
  return out;
}

SimplicialComplex SimplicialComplex::link(Mask sigma) const {
  std::vector<Mask> gens;
  for (Mask f : facets_)
    if (is_subset(sigma, f)) gens.push_back(f & ~sigma);
  // Facets of distinct facets stay incomparable after removing sigma, so the
  // list is already an antichain; from_facets just canonicalizes.
  return from_facets(r_, std::move(gens));
}

SimplicialComplex SimplicialComplex::restriction(Mask sigma) const {
  std::vector<Mask> gens;
  for (Mask f : facets_) gens.push_back(f & sigma);
  return from_facets(r_, std::move(gens));
}

bool SimplicialComplex::is_cone_over(int v) const {
  if (is_void()) return false;
  for (Mask f : facets_)
    if (!has_vertex(f, v)) return false;
  return true;
}

bool SimplicialComplex::is_cone() const {
  Mask s = vertex_support();
  for (int v : vertices_of(s))
    if (is_cone_over(v)) return true;
  return false;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) return true;
  int d = popcount(facets_.front());
  for (Mask f : facets_)
    if (popcount(f) != d) return false;
  return true;
}

bool SimplicialComplex::is_matroid() const {
  if (is_void()) throw std::domain_error("is_matroid on the void complex");
  Mask s = vertex_support();
  bool ok = true;
  for_each_submask(s, [&](Mask sigma) {
    if (ok && !restriction(sigma).is_pure()) ok = false;
  });
  return ok;
}

std::vector<Mask> SimplicialComplex::minimal_nonfaces() const {
  if (is_void()) throw std::domain_error("minimal nonfaces of the void complex");
  Mask full = full_mask(r_);
  std::vector<bool> face(size_t{1} << r_, false);
  for (Mask f : facets_)
    for_each_submask(f, [&](Mask s) { face[s] = true; });
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    if (face[m]) continue;
    bool minimal = true;
    for (int v : vertices_of(m))
      if (!face[m & ~vertex_mask(v)]) { minimal = false; break; }
    if (minimal) out.push_back(m);
    if (m == full) break;
  }
  std::sort(out.begin(), out.end(), canon_less);
  return out;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
  Mask full = full_mask(r_);
  if (is_void()) return full_simplex(r_);
  std::vector<Mask> gens;
  for (Mask m : minimal_nonfaces()) gens.push_back(full & ~m);
  return from_facets(r_, std::move(gens));
}

std::vector<Mask> SimplicialComplex::canonical_iso_key() const {
  std::vector<int> perm(r_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> best = facets_;
  std::vector<Mask> cur(facets_.size());
  auto less_list = [](const std::vector<Mask>& a, const std::vector<Mask>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] != b[i]) return canon_less(a[i], b[i]);
    }
    return a.size() < b.size();
  };
  do {
    for (size_t k = 0; k < facets_.size(); ++k) {
      Mask m = 0;
      for (int v = 0; v < r_; ++v)
        if (facets_[k] & (Mask{1} << v)) m |= Mask{1} << perm[v];
      cur[k] = m;
    }
    std::sort(cur.begin(), cur.end(), canon_less);
    if (less_list(cur, best)) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string SimplicialComplex::to_string() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (i) os << ",";
    os << "{";
    auto vs = vertices_of(facets_[i]);
    for (size_t j = 0; j < vs.size(); ++j) {
      if (j) os << ",";
      os << vs[j];
    }
    os << "}";
  }
  os << ">";
  return os.str();
}

}  // namespace srpow
