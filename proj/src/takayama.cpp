#include "srpow/takayama.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "srpow/homology.hpp"

namespace srpow {

SimplicialComplex degree_complex(const SimplicialComplex& c, int n, const DegreeVector& alpha) {
  if (c.is_void()) throw std::domain_error("degree complex over the void complex");
  if (n < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  if (static_cast<int>(alpha.alpha.size()) != c.r())
    throw std::invalid_argument("degree vector has wrong length");
  Mask g = alpha.negative_support();
  if (!c.contains_face(g)) return SimplicialComplex::void_complex(c.r());
  SimplicialComplex link = c.link(g);
  std::vector<Mask> kept;
  for (Mask f : link.facets()) {
    long s = 0;
    for (int i = 0; i < c.r(); ++i)
      if (alpha.alpha[i] > 0 && !(f & (Mask{1} << i)) && !(g & (Mask{1} << i)))
        s += alpha.alpha[i];
    if (s <= n - 1) kept.push_back(f);
  }
  return SimplicialComplex::from_facets(c.r(), std::move(kept));
}

SimplicialComplex degree_complex_from_ideal(const MonomialIdeal& I, const DegreeVector& alpha) {
  int r = I.r();
  if (static_cast<int>(alpha.alpha.size()) != r)
    throw std::invalid_argument("degree vector has wrong length");
  Mask g = alpha.negative_support();
  // x^alpha in I*R[x_i^{-1} : i in T] iff some generator b has b_i <= alpha_i
  // for every coordinate outside T.
  auto localized_member = [&](Mask t) {
    for (const auto& b : I.generators()) {
      bool le = true;
      for (int i = 0; i < r; ++i) {
        if (t & (Mask{1} << i)) continue;
        if (b[i] > alpha.alpha[i]) { le = false; break; }
      }
      if (le) return true;
    }
    return false;
  };
  std::vector<Mask> faces;
  Mask free = full_mask(r) & ~g;
  for_each_submask(free, [&](Mask f) {
    if (!localized_member(f | g)) faces.push_back(f);
  });
  return SimplicialComplex::from_facets(r, std::move(faces));
}

long local_cohomology_dim(const SimplicialComplex& c, int n, const DegreeVector& alpha, int i,
                          const FieldSpec& field) {
  SimplicialComplex d = degree_complex(c, n, alpha);
  if (d.is_void()) return 0;
  Mask g = alpha.negative_support();
  return reduced_homology_cached(d, field).dim(i - popcount(g) - 1);
}

std::optional<int> AInvariants::reg_quotient() const {
  std::optional<int> reg;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && (!reg || *a[i] + static_cast<int>(i) > *reg)) reg = *a[i] + static_cast<int>(i);
  return reg;
}

AInvariants a_invariants(const SimplicialComplex& c, int n, const FieldSpec& field) {
  if (c.is_void()) throw std::domain_error("a-invariants over the void complex");
  if (n < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  const int r = c.r();
  AInvariants out;
  out.a.assign(r + 1, std::nullopt);
  out.witness.assign(r + 1, DegreeVector{});

  for (Mask g : c.faces()) {
    SimplicialComplex link = c.link(g);
    const std::vector<Mask>& lf = link.facets();
    const int t = static_cast<int>(lf.size());
    std::vector<int> free = vertices_of(full_mask(r) & ~g);
    const int nf = static_cast<int>(free.size());

    // For fixed G the degree complex depends on alpha only through the set of
    // link facets passing the <= n-1 cut; group the box by that profile and
    // keep the best |alpha| per profile.
    const int words = (t + 63) / 64;
    std::map<std::vector<std::uint64_t>, std::pair<long, std::vector<int>>> best;
    std::vector<std::uint64_t> prof(words);
    std::vector<int> vals(nf, 0);
    auto visit = [&](auto&& self, int pos) -> void {
      if (pos == nf) {
        std::fill(prof.begin(), prof.end(), 0);
        bool any = false;
        for (int j = 0; j < t; ++j) {
          long s = 0;
          for (int k = 0; k < nf; ++k)
            if (!has_vertex(lf[j], free[k])) s += vals[k];
          if (s <= n - 1) {
            prof[j >> 6] |= std::uint64_t{1} << (j & 63);
            any = true;
          }
        }
        if (!any) return;
        long total = 0;
        for (int v : vals) total += v;
        auto it = best.find(prof);
        if (it == best.end())
          best.emplace(prof, std::pair<long, std::vector<int>>{total, vals});
        else if (total > it->second.first)
          it->second = {total, vals};
        return;
      }
      for (int e = 0; e < n; ++e) {
        vals[pos] = e;
        self(self, pos + 1);
      }
    };
    visit(visit, 0);

    const int gsize = popcount(g);
    for (const auto& [profile, entry] : best) {
      std::vector<Mask> kept;
      for (int j = 0; j < t; ++j)
        if (profile[j >> 6] & (std::uint64_t{1} << (j & 63))) kept.push_back(lf[j]);
      SimplicialComplex dc = SimplicialComplex::from_facets(r, std::move(kept));
      ReducedHomology h = reduced_homology_cached(dc, field);
      if (h.all_zero()) continue;
      const long value = entry.first - gsize;
      for (int d = -1; d < static_cast<int>(h.dims.size()); ++d) {
        if (h.dim(d) == 0) continue;
        int i = d + gsize + 1;
        if (i < 0 || i > r) continue;
        if (!out.a[i] || value > *out.a[i]) {
          out.a[i] = static_cast<int>(value);
          DegreeVector w;
          w.alpha.assign(r, 0);
          for (int v : vertices_of(g)) w.alpha[v - 1] = -1;
          for (int k = 0; k < nf; ++k) w.alpha[free[k] - 1] = entry.second[k];
          out.witness[i] = std::move(w);
        }
      }
    }
  }
  return out;
}

std::optional<int> reg_symbolic_power(const SimplicialComplex& c, int n, const FieldSpec& field) {
  if (c.is_void()) throw std::domain_error("regularity over the void complex");
  if (c.is_full_simplex()) return std::nullopt;  // zero ideal
  auto reg_q = a_invariants(c, n, field).reg_quotient();
  if (!reg_q) throw std::logic_error("no nonvanishing local cohomology found for a nonzero ideal");
  return *reg_q + 1;
}

int reg_links(const SimplicialComplex& c, const FieldSpec& field) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("reg_links needs a proper nonzero Stanley-Reisner ideal");
  int best = 0;  // sigma = a facet gives lk = {emptyset}, H~_{-1} != 0, d = 0
  for (Mask sigma : c.faces()) {
    ReducedHomology h = reduced_homology_cached(c.link(sigma), field);
    int top = h.top_nonzero();
    if (top != INT_MIN) best = std::max(best, top + 1);
  }
  return best;
}

}  // namespace srpow
