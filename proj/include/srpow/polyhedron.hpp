#pragma once

#include <vector>

#include "srpow/complex.hpp"
#include "srpow/rational.hpp"

namespace srpow {

enum class Rel { Ge, Le };

// One closed halfspace: coeff . x (>= | <=) rhs.
struct LinearConstraint {
  std::vector<Rational> coeff;
  Rel rel = Rel::Ge;
  Rational rhs = 0;
};

// Intersection of halfspaces in Q^dim. Nonnegativity constraints are stored
// like any others.
struct RationalPolyhedron {
  int dim = 0;
  std::vector<LinearConstraint> constraints;
};

// All vertices (0-dimensional faces), exactly: every dim-subset of
// constraints is solved as an equality system; nonsingular solutions are kept
// when they satisfy all constraints. Deduplicated, sorted lexicographically.
std::vector<std::vector<Rational>> vertices(const RationalPolyhedron& p);

// The recession cone is trivial. Requires the nonnegative orthant to contain
// the polyhedron's recession directions (true for every polyhedron built
// here, all of which carry x_i >= 0); checked by slicing the homogenized
// system with sum x_i = 1.
bool is_bounded(const RationalPolyhedron& p);

// { x >= 0 : sum_{i not in F} x_i >= 1 for every facet F }. Rejects void and
// the full simplex.
RationalPolyhedron symbolic_polyhedron(const SimplicialComplex& c);

// Max coordinate sum over the vertices of the symbolic polyhedron, with a
// maximizing vertex.
struct DeltaInvariant {
  Rational value;
  std::vector<Rational> witness;
};
DeltaInvariant delta_invariant(const SimplicialComplex& c);

// Chamber polyhedron of a facet split at level m >= 1: facets listed in
// `leq` (indices into c.facets()) contribute sum_{i not in F} x_i <= m, the
// others >= m, plus x >= 0. Scaling: the level-m chamber is m times the
// level-1 chamber.
RationalPolyhedron chamber_polyhedron(const SimplicialComplex& c, const std::vector<int>& leq,
                                      int m);

// Variant with strict-side shifted bound: <= m-1 on `leq` facets, >= m on the
// rest, plus x >= 0.
RationalPolyhedron shifted_chamber_polyhedron(const SimplicialComplex& c,
                                              const std::vector<int>& leq, int m);

Rational max_coordinate_sum(const std::vector<std::vector<Rational>>& pts);

}  // namespace srpow
