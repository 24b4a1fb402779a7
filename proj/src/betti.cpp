#include "srpow/betti.hpp"

#include <numeric>
#include <stdexcept>

#include "srpow/homology.hpp"

namespace srpow {

int BettiTable::regularity() const {
  bool any = false;
  int reg = 0;
  for (const auto& [key, b] : beta) {
    if (b == 0) continue;
    int deg = std::accumulate(key.second.begin(), key.second.end(), 0);
    reg = any ? std::max(reg, deg - key.first) : deg - key.first;
    any = true;
  }
  if (!any) throw std::domain_error("regularity of an empty Betti table");
  return reg;
}

int BettiTable::pd_quotient() const {
  int top = -1;
  for (const auto& [key, b] : beta)
    if (b != 0) top = std::max(top, key.first);
  if (top < 0) throw std::domain_error("projective dimension of an empty Betti table");
  return top + 1;
}

long BettiTable::total(int i) const {
  long s = 0;
  for (const auto& [key, b] : beta)
    if (key.first == i) s += b;
  return s;
}

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field) {
  if (!I.is_proper()) throw std::domain_error("Betti table of the zero or unit ideal");
  int r = I.r();
  BettiTable t;
  t.r = r;
  Exponents join = I.generator_join();
  Exponents a(r, 0);
  // Every multidegree with a nonzero Betti number lies below the generator
  // join componentwise (for monomial ideals the resolution stays inside the
  // lcm lattice of the generators).
  auto visit = [&](auto&& self, int pos) -> void {
    if (pos == r) {
      Mask sup = 0;
      for (int i = 0; i < r; ++i)
        if (a[i] > 0) sup |= Mask{1} << i;
      std::vector<Mask> koszul;
      Exponents rest(r);
      for_each_submask(sup, [&](Mask tau) {
        for (int i = 0; i < r; ++i) rest[i] = a[i] - ((tau >> i) & 1);
        if (I.contains_monomial(rest)) koszul.push_back(tau);
      });
      if (koszul.empty()) return;  // void: no contribution at this multidegree
      SimplicialComplex k = SimplicialComplex::from_facets(r, std::move(koszul));
      ReducedHomology h = reduced_homology_cached(k, field);
      for (int d = -1; d < static_cast<int>(h.dims.size()) - 1; ++d)
        if (h.dim(d) != 0) t.beta[{d + 1, a}] += h.dim(d);
      return;
    }
    for (int e = 0; e <= join[pos]; ++e) {
      a[pos] = e;
      self(self, pos + 1);
    }
    a[pos] = 0;
  };
  visit(visit, 0);
  return t;
}

int reg_via_betti(const MonomialIdeal& I, const FieldSpec& field) {
  return betti_table(I, field).regularity();
}

int pd_quotient_via_betti(const MonomialIdeal& I, const FieldSpec& field) {
  return betti_table(I, field).pd_quotient();
}

}  // namespace srpow
