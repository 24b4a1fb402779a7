#pragma once

#include <string>
#include <vector>

#include "srpow/bits.hpp"

namespace srpow {

// Abstract simplicial complex on ground set {1..r}, stored by its facets in
// canonical order (size, then lexicographic). The void complex has no facets;
// the complex {emptyset} has the single facet 0. Ground set vertices absent
// from every facet are permitted (they are non-faces).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Keeps the maximal sets of `gens` as facets (deduplicated, canonical).
  // `gens` empty yields the void complex.
  static SimplicialComplex from_facets(int r, std::vector<Mask> gens);
  static SimplicialComplex from_vertex_lists(int r, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex full_simplex(int r);
  static SimplicialComplex empty_complex(int r);  // {emptyset}
  static SimplicialComplex void_complex(int r);

  int r() const { return r_; }
  const std::vector<Mask>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_full_simplex() const { return facets_.size() == 1 && facets_[0] == full_mask(r_); }

  // Max facet size minus one; {emptyset} has dimension -1. Rejects void.
  int dim() const;

  bool contains_face(Mask f) const;
  Mask vertex_support() const;

  // All faces including the empty face, grouped nowhere: sorted canonically.
  // Rejects void.
  std::vector<Mask> faces() const;

  // lk(sigma) = {F : F cap sigma = 0, F cup sigma a face}, on the same ground
  // set. Void when sigma is not a face.
  SimplicialComplex link(Mask sigma) const;

  // Faces contained in sigma, on the same ground set.
  SimplicialComplex restriction(Mask sigma) const;

  bool is_cone_over(int v) const;
  bool is_cone() const;
  bool is_pure() const;

  // Every restriction to a subset of the vertex support is pure.
  bool is_matroid() const;

  // {complement of tau : tau not a face}; total involution, the full simplex
  // and the void complex are dual to each other.
  SimplicialComplex alexander_dual() const;

  // Non-faces that are minimal under inclusion, canonical order.
  std::vector<Mask> minimal_nonfaces() const;

  // Lexicographically least facet list over all relabelings of {1..r};
  // equal keys = isomorphic complexes.
  std::vector<Mask> canonical_iso_key() const;

  std::string to_string() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int r_ = 0;
  std::vector<Mask> facets_;
};

}  // namespace srpow
