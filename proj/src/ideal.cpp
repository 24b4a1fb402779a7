#include "srpow/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace srpow {
namespace {

bool divides(const Exponents& b, const Exponents& a) {
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

int total_degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool gen_less(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(int r, std::vector<Exponents> gens) {
  if (r < 0 || r > kMaxGroundSet) throw std::invalid_argument("variable count out of range");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != r)
      throw std::invalid_argument("generator exponent vector has wrong length");
    for (int e : g)
      if (e < 0) throw std::invalid_argument("generator exponent must be nonnegative");
  }
  std::sort(gens.begin(), gens.end(), gen_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> minimal;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& m : minimal)
      if (divides(m, g)) { dominated = true; break; }
    if (!dominated) minimal.push_back(g);
  }
  MonomialIdeal I;
  I.r_ = r;
  I.gens_ = std::move(minimal);
  return I;
}

MonomialIdeal MonomialIdeal::zero(int r) { return from_generators(r, {}); }

MonomialIdeal MonomialIdeal::unit(int r) { return from_generators(r, {Exponents(r, 0)}); }

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::is_squarefree() const {
  for (const auto& g : gens_)
    for (int e : g)
      if (e > 1) return false;
  return true;
}

bool MonomialIdeal::contains_monomial(const Exponents& a) const {
  if (static_cast<int>(a.size()) != r_)
    throw std::invalid_argument("exponent vector has wrong length");
  for (const auto& g : gens_)
    if (divides(g, a)) return true;
  return false;
}

int MonomialIdeal::max_generator_degree() const {
  if (!is_proper()) throw std::domain_error("max generator degree of the zero or unit ideal");
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

Exponents MonomialIdeal::generator_join() const {
  Exponents j(r_, 0);
  for (const auto& g : gens_)
    for (int i = 0; i < r_; ++i) j[i] = std::max(j[i], g[i]);
  return j;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
  if (c.is_void()) throw std::domain_error("Stanley-Reisner ideal of the void complex");
  std::vector<Exponents> gens;
  for (Mask m : c.minimal_nonfaces()) {
    Exponents g(c.r(), 0);
    for (int v : vertices_of(m)) g[v - 1] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal::from_generators(c.r(), std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& I) {
  int r = I.r();
  if (I.is_unit()) return SimplicialComplex::void_complex(r);
  std::vector<Mask> supports;
  for (const auto& g : I.generators()) {
    Mask m = 0;
    for (int i = 0; i < r; ++i)
      if (g[i] > 0) m |= Mask{1} << i;
    supports.push_back(m);
  }
  Mask full = full_mask(r);
  std::vector<Mask> good;
  for (Mask m = 0;; ++m) {
    bool bad = false;
    for (Mask s : supports)
      if (is_subset(s, m)) { bad = true; break; }
    if (!bad) good.push_back(m);
    if (m == full) break;
  }
  return SimplicialComplex::from_facets(r, std::move(good));
}

bool symbolic_power_contains(const SimplicialComplex& c, int n, const Exponents& a) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("symbolic power needs a proper nonzero Stanley-Reisner ideal");
  if (n < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  if (static_cast<int>(a.size()) != c.r())
    throw std::invalid_argument("exponent vector has wrong length");
  for (Mask f : c.facets()) {
    long s = 0;
    for (int i = 0; i < c.r(); ++i)
      if (!(f & (Mask{1} << i))) s += a[i];
    if (s < n) return false;
  }
  return true;
}

MonomialIdeal symbolic_power(const SimplicialComplex& c, int n) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("symbolic power needs a proper nonzero Stanley-Reisner ideal");
  if (n < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  int r = c.r();
  double box_size = 1;
  for (int i = 0; i < r; ++i) box_size *= n + 1;
  if (box_size > 2e8)
    throw std::invalid_argument("symbolic power generator enumeration too large for this r and n");
  // Walk the box {0..n}^r degree by degree; a point is a minimal generator
  // iff it is feasible and dominates no previously found generator. Degree
  // order makes the dominance test against found generators sufficient.
  std::vector<Exponents> gens;
  Exponents a(r, 0);
  auto visit = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == r) {
      if (remaining != 0) return;
      for (const auto& g : gens)
        if (divides(g, a)) return;
      if (symbolic_power_contains(c, n, a)) gens.push_back(a);
      return;
    }
    int hi = std::min(n, remaining);
    int tail = (r - pos - 1) * n;  // max degree the remaining coords can absorb
    for (int e = std::max(0, remaining - tail); e <= hi; ++e) {
      a[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    a[pos] = 0;
  };
  for (int d = 0; d <= n * r; ++d) visit(visit, 0, d);
  return MonomialIdeal::from_generators(r, std::move(gens));
}

Contraction contract(const MonomialIdeal& I, Mask sigma) {
  int r = I.r();
  if (!is_subset(sigma, full_mask(r))) throw std::invalid_argument("sigma outside ground set");
  std::vector<int> kept;
  for (int v = 1; v <= r; ++v)
    if (!has_vertex(sigma, v)) kept.push_back(v);
  int m = static_cast<int>(kept.size());
  std::vector<Exponents> gens;
  for (const auto& g : I.generators()) {
    Exponents h(m);
    for (int j = 0; j < m; ++j) h[j] = g[kept[j] - 1];
    gens.push_back(std::move(h));
  }
  return Contraction{MonomialIdeal::from_generators(m, std::move(gens)), std::move(kept)};
}

}  // namespace srpow
