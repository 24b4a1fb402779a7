#pragma once

#include <utility>
#include <vector>

#include "srpow/complex.hpp"
#include "srpow/field.hpp"
#include "srpow/graph.hpp"
#include "srpow/hypergraph.hpp"

namespace srpow {

// Matching numbers of a graph, each with a witness. An induced matching has
// no further graph edge between its endpoints. An ordered matching
// {u_1v_1..u_sv_s} has independent {u_1..u_s} and admits an ordering with
// every cross edge u_i v_j pointing forward (i <= j); equivalently the
// designated precedence digraph is acyclic.
struct MatchingNumbers {
  int matching = 0;
  int induced = 0;
  int ordered = 0;
  std::vector<Mask> matching_witness;
  std::vector<Mask> induced_witness;
  std::vector<std::pair<int, int>> ordered_witness;  // (u_i, v_i) in order
};
MatchingNumbers matching_numbers(const Graph& g);

// Minimum size of an edgewise dominant edge set S: every non-isolated vertex
// that is outside union(S) and not in a trivial edge must have a neighbor in
// union(S). S may be empty when every non-isolated vertex is exempt.
// Rejects edgeless hypergraphs.
struct EdgewiseDomination {
  int value = 0;
  std::vector<Mask> witness;
};
EdgewiseDomination edgewise_domination(const Hypergraph& h);

// b(Delta) = max over nonempty facet subsets S of reg(I_<S>), the regularity
// of the Stanley-Reisner ideal of the subcomplex generated by S (same ground
// set). Rejects void and the full simplex.
struct BInvariant {
  int value = 0;
  std::vector<int> witness;  // indices into facets()
};
BInvariant b_invariant(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace srpow
