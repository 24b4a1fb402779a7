#pragma once

#include <climits>
#include <vector>

#include "srpow/complex.hpp"
#include "srpow/field.hpp"
#include "srpow/matrix.hpp"

namespace srpow {

// Reduced simplicial homology dimensions over a field; index i runs from -1
// (the {emptyset} complex has H~_{-1} = K) through dim of the complex.
struct ReducedHomology {
  std::vector<long> dims;  // dims[k] = dim H~_{k-1}

  long dim(int i) const {
    int k = i + 1;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
  }
  bool all_zero() const {
    for (long d : dims)
      if (d != 0) return false;
    return true;
  }
  // Largest i with H~_i != 0, or INT_MIN when acyclic.
  int top_nonzero() const {
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k)
      if (dims[k] != 0) return k - 1;
    return INT_MIN;
  }
};

// Boundary-matrix ranks over the field; dim H~_i = f_i - rank d_i - rank d_{i+1},
// with the empty face as the sole (-1)-chain and d_0 the augmentation map.
// Rejects the void complex.
ReducedHomology reduced_homology(const SimplicialComplex& c, const FieldSpec& field);

// Memoized variant keyed by the support-compressed facet list and the field
// characteristic. The cache is thread-local.
ReducedHomology reduced_homology_cached(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace srpow
