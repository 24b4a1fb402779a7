#pragma once

#include <map>
#include <utility>
#include <vector>

#include "srpow/field.hpp"
#include "srpow/ideal.hpp"

namespace srpow {

// Multigraded Betti numbers of a monomial ideal, computed multidegree by
// multidegree from reduced homology of upper Koszul subcomplexes:
//   beta_{i,a}(I) = dim_K H~_{i-1}({ squarefree tau <= a : x^(a-tau) in I }).
// Rejects the zero and unit ideals.
struct BettiTable {
  int r = 0;
  std::map<std::pair<int, Exponents>, long> beta;  // (homological degree i, multidegree a)

  // max |a| - i over nonzero entries.
  int regularity() const;
  // pd(R/I) = 1 + max i over nonzero entries.
  int pd_quotient() const;
  long total(int i) const;
};

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field);

int reg_via_betti(const MonomialIdeal& I, const FieldSpec& field);
int pd_quotient_via_betti(const MonomialIdeal& I, const FieldSpec& field);

}  // namespace srpow
