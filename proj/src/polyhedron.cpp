#include "srpow/polyhedron.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "srpow/bits.hpp"

namespace srpow {
namespace {

// Integer row form of a constraint (coefficients scaled by the lcm of
// denominators; scaling by a positive factor preserves the halfspace).
struct IntRow {
  std::vector<BigInt> a;
  BigInt rhs;
  Rel rel;
  bool small = true;  // all values fit comfortably in int64
  std::vector<std::int64_t> a64;
  std::int64_t rhs64 = 0;
};

IntRow to_int_row(const LinearConstraint& c) {
  IntRow row;
  BigInt l = denominator(c.rhs);
  for (const auto& q : c.coeff) l = lcm(l, denominator(q));
  row.a.reserve(c.coeff.size());
  for (const auto& q : c.coeff) row.a.push_back(numerator(q) * (l / denominator(q)));
  row.rhs = numerator(c.rhs) * (l / denominator(c.rhs));
  row.rel = c.rel;
  BigInt bound = BigInt(std::numeric_limits<std::int64_t>::max()) >> 8;
  for (const auto& v : row.a)
    if (abs(v) > bound) row.small = false;
  if (abs(row.rhs) > bound) row.small = false;
  if (row.small) {
    row.a64.reserve(row.a.size());
    for (const auto& v : row.a) row.a64.push_back(static_cast<std::int64_t>(v));
    row.rhs64 = static_cast<std::int64_t>(row.rhs);
  }
  return row;
}

// Determinant via fraction-free elimination; nullopt when the 64-bit path
// overflows.
std::optional<std::int64_t> det64(std::vector<std::int64_t> m, int d) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<size_t>(i) * d + j]; };
  std::int64_t prev = 1;
  int sign = 1;
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int i = c; i < d; ++i)
      if (at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < d; ++j) std::swap(at(pivot, j), at(c, j));
      sign = -sign;
    }
    std::int64_t p = at(c, c);
    for (int i = c + 1; i < d; ++i) {
      std::int64_t f = at(i, c);
      for (int j = c; j < d; ++j) {
        __int128 val = (static_cast<__int128>(at(i, j)) * p -
                        static_cast<__int128>(at(c, j)) * f) / prev;
        if (val > kMax || val < -kMax) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(val);
      }
      at(i, c) = 0;
    }
    prev = p;
  }
  return sign * at(d - 1, d - 1);
}

BigInt det_big(std::vector<BigInt> m, int d) {
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<size_t>(i) * d + j]; };
  BigInt prev = 1;
  int sign = 1;
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int i = c; i < d; ++i)
      if (at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = 0; j < d; ++j) std::swap(at(pivot, j), at(c, j));
      sign = -sign;
    }
    BigInt p = at(c, c);
    for (int i = c + 1; i < d; ++i) {
      BigInt f = at(i, c);
      for (int j = c; j < d; ++j) at(i, j) = (at(i, j) * p - at(c, j) * f) / prev;
      at(i, c) = 0;
    }
    prev = p;
  }
  return sign * at(d - 1, d - 1);
}

// Solution of a square equality system as integer numerators over a common
// positive denominator.
struct Candidate {
  std::vector<BigInt> num;
  BigInt den;
  bool small;  // numerators and denominator fit in int64
  std::vector<std::int64_t> num64;
  std::int64_t den64;
};

// Cramer solve of the square system given by `rows` as equalities. Returns
// nullopt when singular.
std::optional<Candidate> solve_equalities(const std::vector<const IntRow*>& rows, int d) {
  bool small = true;
  for (const IntRow* r : rows)
    if (!r->small) small = false;
  if (small) {
    std::vector<std::int64_t> m(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m[static_cast<size_t>(i) * d + j] = rows[i]->a64[j];
    auto dd = det64(m, d);
    if (dd && *dd == 0) return std::nullopt;
    if (dd) {
      Candidate c;
      c.small = true;
      c.den64 = *dd;
      c.num64.assign(d, 0);
      bool ok = true;
      for (int j = 0; j < d && ok; ++j) {
        std::vector<std::int64_t> mj(static_cast<size_t>(d) * d);
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < d; ++k)
            mj[static_cast<size_t>(i) * d + k] = (k == j) ? rows[i]->rhs64 : rows[i]->a64[k];
        auto dj = det64(mj, d);
        if (!dj) ok = false;
        else c.num64[j] = *dj;
      }
      if (ok) {
        if (c.den64 < 0) {
          c.den64 = -c.den64;
          for (auto& v : c.num64) v = -v;
        }
        c.den = c.den64;
        c.num.assign(c.num64.begin(), c.num64.end());
        return c;
      }
    }
  }
  std::vector<BigInt> m(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m[static_cast<size_t>(i) * d + j] = rows[i]->a[j];
  BigInt dd = det_big(m, d);
  if (dd == 0) return std::nullopt;
  Candidate c;
  c.small = false;
  c.den = dd;
  c.num.assign(d, 0);
  for (int j = 0; j < d; ++j) {
    std::vector<BigInt> mj(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        mj[static_cast<size_t>(i) * d + k] = (k == j) ? rows[i]->rhs : rows[i]->a[k];
    c.num[j] = det_big(mj, d);
  }
  if (c.den < 0) {
    c.den = -c.den;
    for (auto& v : c.num) v = -v;
  }
  return c;
}

// coeff . (num/den) REL rhs with den > 0, i.e. coeff . num REL rhs * den.
bool satisfies(const IntRow& row, const Candidate& x) {
  if (row.small && x.small) {
    __int128 lhs = 0;
    for (size_t j = 0; j < x.num64.size(); ++j)
      lhs += static_cast<__int128>(row.a64[j]) * x.num64[j];
    __int128 rhs = static_cast<__int128>(row.rhs64) * x.den64;
    return row.rel == Rel::Ge ? lhs >= rhs : lhs <= rhs;
  }
  BigInt lhs = 0;
  for (size_t j = 0; j < x.num.size(); ++j)
    if (row.a[j] != 0) lhs += row.a[j] * x.num[j];
  BigInt rhs = row.rhs * x.den;
  return row.rel == Rel::Ge ? lhs >= rhs : lhs <= rhs;
}

}  // namespace

std::vector<std::vector<Rational>> vertices(const RationalPolyhedron& p) {
  const int d = p.dim;
  if (d <= 0) throw std::invalid_argument("polyhedron dimension must be positive");
  for (const auto& c : p.constraints)
    if (static_cast<int>(c.coeff.size()) != d)
      throw std::invalid_argument("constraint length mismatch");
  std::vector<IntRow> rows;
  rows.reserve(p.constraints.size());
  for (const auto& c : p.constraints) rows.push_back(to_int_row(c));
  const int m = static_cast<int>(rows.size());
  std::set<std::vector<Rational>> found;
  if (m >= d) {
    std::vector<const IntRow*> sel(d);
    for_each_combination(m, d, [&](const std::vector<int>& idx) {
      for (int i = 0; i < d; ++i) sel[i] = &rows[idx[i]];
      auto x = solve_equalities(sel, d);
      if (!x) return;
      for (const auto& row : rows)
        if (!satisfies(row, *x)) return;
      std::vector<Rational> pt(d);
      for (int j = 0; j < d; ++j) pt[j] = Rational(x->num[j], x->den);
      found.insert(std::move(pt));
    });
  }
  return {found.begin(), found.end()};
}

bool is_bounded(const RationalPolyhedron& p) {
  // Direction vectors of the recession cone satisfy the homogenized system;
  // with x >= 0 among the constraints the cone lives in the nonnegative
  // orthant, so it is nontrivial iff it meets the simplex slice sum x = 1.
  RationalPolyhedron cone;
  cone.dim = p.dim;
  for (const auto& c : p.constraints) {
    LinearConstraint h = c;
    h.rhs = 0;
    cone.constraints.push_back(std::move(h));
  }
  LinearConstraint lo, hi;
  lo.coeff.assign(p.dim, 1);
  lo.rel = Rel::Ge;
  lo.rhs = 1;
  hi.coeff.assign(p.dim, 1);
  hi.rel = Rel::Le;
  hi.rhs = 1;
  cone.constraints.push_back(lo);
  cone.constraints.push_back(hi);
  return vertices(cone).empty();
}

RationalPolyhedron symbolic_polyhedron(const SimplicialComplex& c) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("symbolic polyhedron needs a proper nonzero Stanley-Reisner ideal");
  const int r = c.r();
  RationalPolyhedron p;
  p.dim = r;
  for (Mask f : c.facets()) {
    LinearConstraint lc;
    lc.coeff.assign(r, 0);
    for (int i = 0; i < r; ++i)
      if (!(f & (Mask{1} << i))) lc.coeff[i] = 1;
    lc.rel = Rel::Ge;
    lc.rhs = 1;
    p.constraints.push_back(std::move(lc));
  }
  for (int i = 0; i < r; ++i) {
    LinearConstraint nn;
    nn.coeff.assign(r, 0);
    nn.coeff[i] = 1;
    nn.rel = Rel::Ge;
    nn.rhs = 0;
    p.constraints.push_back(std::move(nn));
  }
  return p;
}

Rational max_coordinate_sum(const std::vector<std::vector<Rational>>& pts) {
  if (pts.empty()) throw std::domain_error("coordinate sum over an empty vertex set");
  Rational best;
  bool first = true;
  for (const auto& v : pts) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    if (first || s > best) { best = s; first = false; }
  }
  return best;
}

DeltaInvariant delta_invariant(const SimplicialComplex& c) {
  auto vs = vertices(symbolic_polyhedron(c));
  if (vs.empty()) throw std::logic_error("symbolic polyhedron has no vertices");
  DeltaInvariant best;
  bool first = true;
  for (const auto& v : vs) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    if (first || s > best.value) {
      best.value = s;
      best.witness = v;
      first = false;
    }
  }
  return best;
}

namespace {

RationalPolyhedron chamber_impl(const SimplicialComplex& c, const std::vector<int>& leq, int m,
                                int leq_shift) {
  if (c.is_void() || c.is_full_simplex())
    throw std::domain_error("chamber polyhedron needs a proper nonzero Stanley-Reisner ideal");
  if (m < 1) throw std::invalid_argument("chamber level must be >= 1");
  const int r = c.r();
  const auto& facets = c.facets();
  std::vector<bool> is_leq(facets.size(), false);
  for (int i : leq) {
    if (i < 0 || i >= static_cast<int>(facets.size()))
      throw std::invalid_argument("facet index out of range");
    is_leq[i] = true;
  }
  RationalPolyhedron p;
  p.dim = r;
  for (size_t k = 0; k < facets.size(); ++k) {
    LinearConstraint lc;
    lc.coeff.assign(r, 0);
    for (int i = 0; i < r; ++i)
      if (!(facets[k] & (Mask{1} << i))) lc.coeff[i] = 1;
    if (is_leq[k]) {
      lc.rel = Rel::Le;
      lc.rhs = m - leq_shift;
    } else {
      lc.rel = Rel::Ge;
      lc.rhs = m;
    }
    p.constraints.push_back(std::move(lc));
  }
  for (int i = 0; i < r; ++i) {
    LinearConstraint nn;
    nn.coeff.assign(r, 0);
    nn.coeff[i] = 1;
    nn.rel = Rel::Ge;
    nn.rhs = 0;
    p.constraints.push_back(std::move(nn));
  }
  return p;
}

}  // namespace

RationalPolyhedron chamber_polyhedron(const SimplicialComplex& c, const std::vector<int>& leq,
                                      int m) {
  return chamber_impl(c, leq, m, 0);
}

RationalPolyhedron shifted_chamber_polyhedron(const SimplicialComplex& c,
                                              const std::vector<int>& leq, int m) {
  return chamber_impl(c, leq, m, 1);
}

}  // namespace srpow
