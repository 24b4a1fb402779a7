#pragma once

#include <optional>
#include <vector>

#include "srpow/complex.hpp"
#include "srpow/field.hpp"
#include "srpow/ideal.hpp"

namespace srpow {

// Z^r-graded degree used in the local cohomology search. G(alpha) is the set
// of coordinates with negative entries.
struct DegreeVector {
  std::vector<int> alpha;

  Mask negative_support() const {
    Mask g = 0;
    for (size_t i = 0; i < alpha.size(); ++i)
      if (alpha[i] < 0) g |= Mask{1} << i;
    return g;
  }
  long total() const {
    long s = 0;
    for (int v : alpha) s += v;
    return s;
  }
};

// Degree complex of I_Delta^(n) at alpha: void when G(alpha) is not a face,
// otherwise generated by the facets F of lk(G(alpha)) whose complementary
// coordinates satisfy sum_{i not in F u G(alpha)} alpha_i <= n-1. Lives on
// the ground set of Delta.
SimplicialComplex degree_complex(const SimplicialComplex& c, int n, const DegreeVector& alpha);

// Same complex computed from localization membership: F is a face iff x^alpha
// stays outside I * R[x_i^{-1} : i in F u G(alpha)]. Independent cross-check
// route; I must be the n-th symbolic power itself.
SimplicialComplex degree_complex_from_ideal(const MonomialIdeal& I, const DegreeVector& alpha);

// dim_K of the alpha-graded piece of the i-th local cohomology of R/I^(n):
// reduced homology of the degree complex in dimension i - |G(alpha)| - 1.
long local_cohomology_dim(const SimplicialComplex& c, int n, const DegreeVector& alpha, int i,
                          const FieldSpec& field);

// a_i = max{ |alpha| : H^i_m(R/I^(n))_alpha != 0 }, one entry per i in 0..r,
// empty optional meaning -infinity. The finite search ranges over faces G of
// Delta (negative coordinates, clamped to -1) and boxes {0..n-1} elsewhere;
// entries >= n force the degree complex to be a cone or void, and more
// negative entries only lower |alpha|.
struct AInvariants {
  std::vector<std::optional<int>> a;        // size r+1
  std::vector<DegreeVector> witness;        // witness[i] meaningful iff a[i] set
  std::optional<int> reg_quotient() const;  // max a_i + i
};
AInvariants a_invariants(const SimplicialComplex& c, int n, const FieldSpec& field);

// reg of the n-th symbolic power of I_Delta (the ideal, not the quotient):
// empty only for the zero ideal (full simplex).
std::optional<int> reg_symbolic_power(const SimplicialComplex& c, int n, const FieldSpec& field);

// reg(R/I_Delta) = max{ d : H~_{d-1}(lk(sigma)) != 0 for some face sigma }.
// Rejects void and the full simplex.
int reg_links(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace srpow
