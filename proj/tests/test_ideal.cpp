#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "srpow/enumerate.hpp"
#include "srpow/ideal.hpp"

using namespace srpow;

namespace {

SimplicialComplex path3_complex() {
  return SimplicialComplex::from_vertex_lists(3, {{1, 3}, {2}});
}

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_vertex_lists(3, {{1, 2}, {1, 3}, {2, 3}});
}

std::set<Exponents> gen_set(const MonomialIdeal& I) {
  return {I.generators().begin(), I.generators().end()};
}

std::vector<SimplicialComplex> all_complexes(int r_max) {
  std::vector<SimplicialComplex> out;
  for (int r = 1; r <= r_max; ++r)
    enumerate_instances(InstanceKind::Complex, r, false,
                        [&](const Instance& inst) { out.push_back(inst.complex()); });
  return out;
}

}  // namespace

TEST_CASE("minimal generating sets") {
  const auto I = MonomialIdeal::from_generators(2, {{1, 1}, {2, 1}, {1, 2}});
  CHECK(I.generators() == std::vector<Exponents>{{1, 1}});
  CHECK(I.is_proper());
  CHECK(I.is_squarefree());
  CHECK(I.max_generator_degree() == 2);
  CHECK(I.contains_monomial({3, 1}));
  CHECK_FALSE(I.contains_monomial({3, 0}));
  CHECK(MonomialIdeal::zero(2).is_zero());
  CHECK(MonomialIdeal::unit(2).is_unit());
  CHECK(MonomialIdeal::from_generators(2, {{0, 0}, {1, 0}}).is_unit());
  CHECK_FALSE(MonomialIdeal::from_generators(2, {{2, 0}}).is_squarefree());
  CHECK(MonomialIdeal::from_generators(2, {{2, 0}, {0, 1}}).generator_join() ==
        Exponents{2, 1});
}

TEST_CASE("Stanley-Reisner dictionary") {
  CHECK(stanley_reisner_ideal(hollow_triangle()).generators() ==
        std::vector<Exponents>{{1, 1, 1}});
  CHECK(stanley_reisner_ideal(path3_complex()).generators() ==
        std::vector<Exponents>{{0, 1, 1}, {1, 1, 0}});
  CHECK(stanley_reisner_ideal(SimplicialComplex::empty_complex(2)).generators() ==
        std::vector<Exponents>{{0, 1}, {1, 0}});
  CHECK(stanley_reisner_ideal(SimplicialComplex::full_simplex(2)).is_zero());
  CHECK_THROWS(stanley_reisner_ideal(SimplicialComplex::void_complex(2)));
  CHECK(complex_of(MonomialIdeal::zero(2)).is_full_simplex());
  CHECK(complex_of(MonomialIdeal::unit(2)).is_void());
  // non-squarefree input: the complex sees only the radical
  CHECK(complex_of(MonomialIdeal::from_generators(2, {{2, 1}})) ==
        complex_of(MonomialIdeal::from_generators(2, {{1, 1}})));
  for (const auto& c : all_complexes(4)) CHECK(complex_of(stanley_reisner_ideal(c)) == c);
}

TEST_CASE("symbolic powers of the path ideal") {
  const auto c = path3_complex();  // I = (x1 x2, x2 x3)
  CHECK(symbolic_power(c, 1) == stanley_reisner_ideal(c));
  CHECK(gen_set(symbolic_power(c, 2)) ==
        std::set<Exponents>{{2, 2, 0}, {1, 2, 1}, {0, 2, 2}});
  CHECK(gen_set(symbolic_power(c, 3)) ==
        std::set<Exponents>{{3, 3, 0}, {2, 3, 1}, {1, 3, 2}, {0, 3, 3}});
}

TEST_CASE("symbolic powers of a principal ideal stay principal") {
  CHECK(symbolic_power(hollow_triangle(), 2).generators() ==
        std::vector<Exponents>{{2, 2, 2}});
  CHECK(symbolic_power(hollow_triangle(), 4).generators() ==
        std::vector<Exponents>{{4, 4, 4}});
}

TEST_CASE("symbolic power edge cases and guards") {
  // I = m for the empty complex: symbolic powers are the ordinary powers
  const auto m2 = symbolic_power(SimplicialComplex::empty_complex(2), 2);
  CHECK(gen_set(m2) == std::set<Exponents>{{2, 0}, {1, 1}, {0, 2}});
  CHECK_THROWS(symbolic_power(SimplicialComplex::full_simplex(2), 1));
  CHECK_THROWS(symbolic_power(SimplicialComplex::void_complex(2), 1));
  CHECK_THROWS(symbolic_power(path3_complex(), 0));
}

TEST_CASE("membership agrees with divisibility by a generator") {
  for (const auto& c : all_complexes(3)) {
    if (c.is_full_simplex()) continue;
    for (int n = 1; n <= 3; ++n) {
      const MonomialIdeal power = symbolic_power(c, n);
      Exponents a(static_cast<size_t>(c.r()), 0);
      while (true) {
        CHECK(symbolic_power_contains(c, n, a) == power.contains_monomial(a));
        size_t i = 0;
        while (i < a.size() && a[i] == n + 1) a[i++] = 0;
        if (i == a.size()) break;
        ++a[i];
      }
    }
  }
}

TEST_CASE("minimal generators of symbolic powers stay inside the n-box") {
  for (const auto& c : all_complexes(4)) {
    if (c.is_full_simplex()) continue;
    for (int n = 1; n <= 3; ++n) {
      const MonomialIdeal power = symbolic_power(c, n);
      for (const Exponents& g : power.generators())
        CHECK(*std::max_element(g.begin(), g.end()) <= n);
    }
  }
}

TEST_CASE("contractions") {
  const auto I = stanley_reisner_ideal(path3_complex());  // (x1 x2, x2 x3)

  const Contraction at2 = contract(I, vertex_mask(2));
  CHECK(at2.kept == std::vector<int>{1, 3});
  CHECK(gen_set(at2.ideal) == std::set<Exponents>{{1, 0}, {0, 1}});

  const Contraction at1 = contract(I, vertex_mask(1));
  CHECK(at1.kept == std::vector<int>{2, 3});
  CHECK(at1.ideal.generators() == std::vector<Exponents>{{1, 0}});

  const Contraction at13 = contract(I, 0b101);
  CHECK(at13.kept == std::vector<int>{2});
  CHECK(at13.ideal.generators() == std::vector<Exponents>{{1}});

  CHECK(contract(I, 0).ideal == I);
  CHECK(contract(MonomialIdeal::from_generators(2, {{1, 1}}), 0b11).ideal.is_unit());
  CHECK(contract(MonomialIdeal::zero(3), 0b001).ideal.is_zero());
}
