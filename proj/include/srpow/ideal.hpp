#pragma once

#include <vector>

#include "srpow/bits.hpp"
#include "srpow/complex.hpp"

namespace srpow {

using Exponents = std::vector<int>;

// Monomial ideal in K[x_1..x_r] given by its unique minimal generating set,
// sorted by (total degree, exponent-lex). The zero ideal has no generators;
// the unit ideal is generated by the all-zero exponent vector (x^0 = 1).
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  static MonomialIdeal from_generators(int r, std::vector<Exponents> gens);
  static MonomialIdeal zero(int r);
  static MonomialIdeal unit(int r);

  int r() const { return r_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_zero() && !is_unit(); }
  bool is_squarefree() const;

  // Some generator divides x^a.
  bool contains_monomial(const Exponents& a) const;

  // d(I): max total degree of a minimal generator. Rejects zero and unit.
  int max_generator_degree() const;

  // Componentwise join of the generators (0 for the zero ideal).
  Exponents generator_join() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int r_ = 0;
  std::vector<Exponents> gens_;
};

// I_Delta, generated by the minimal nonfaces. Rejects the void complex
// (its Stanley-Reisner ideal would be the unit ideal of no use here).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c);

// The complex {tau : x^tau not in sqrt(I)}: full simplex for the zero ideal,
// void for the unit ideal.
SimplicialComplex complex_of(const MonomialIdeal& I);

// n-th symbolic power of I_Delta: monomials with sum_{i not in F} a_i >= n
// for every facet F. Generators found inside the box {0..n}^r (minimal
// generator entries never exceed n because every constraint has 0/1
// coefficients and right-hand side n) and minimalized. Rejects void and the
// full simplex (zero ideal), and n < 1.
MonomialIdeal symbolic_power(const SimplicialComplex& c, int n);

// Constraint-form membership test, no generator enumeration.
bool symbolic_power_contains(const SimplicialComplex& c, int n, const Exponents& a);

// I with x_i := 1 for i in sigma, re-minimalized, on the remaining variables
// renumbered 1..r-|sigma| in increasing order of the old labels.
struct Contraction {
  MonomialIdeal ideal;
  std::vector<int> kept;  // kept[new-1] = old label
};
Contraction contract(const MonomialIdeal& I, Mask sigma);

}  // namespace srpow
