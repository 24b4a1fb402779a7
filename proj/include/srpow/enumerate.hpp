#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srpow/complex.hpp"
#include "srpow/graph.hpp"
#include "srpow/hypergraph.hpp"
#include "srpow/bits.hpp"

namespace srpow {

enum class InstanceKind { Complex, Graph, Hypergraph };

std::string to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view text);

// One enumerated or randomly drawn test instance.  `sets` holds facets for
// complexes and edges for graphs/hypergraphs, in the canonical order of the
// corresponding domain type.
struct Instance {
  InstanceKind kind = InstanceKind::Complex;
  int r = 0;
  std::vector<Mask> sets;

  SimplicialComplex complex() const;
  Graph graph() const;
  Hypergraph hypergraph() const;

  // The simplicial complex whose Stanley-Reisner ideal is the instance's
  // ideal: the complex itself, the independence complex of a graph, or the
  // complex of the edge ideal of a hypergraph.
  SimplicialComplex associated_complex() const;

  // Lexicographically least relabeling of `sets` over all vertex
  // permutations; two instances of the same kind are isomorphic iff their
  // keys agree.
  std::vector<Mask> canonical_key() const;
  bool is_canonical_representative() const;

  bool operator==(const Instance&) const = default;
};

// Deterministic streams, ascending in a fixed order:
//   complex    — every facet antichain over [r] except the void complex,
//                so M(r) - 1 instances (M = number of antichains of subsets);
//   graph      — every subset of the r(r-1)/2 vertex pairs;
//   hypergraph — every antichain of nonempty subsets of [r], including the
//                edgeless hypergraph.
// Guard rails: r <= 7 for graphs, r <= 5 for complexes and hypergraphs.
void enumerate_instances(InstanceKind kind, int r, bool up_to_iso,
                         const std::function<void(const Instance&)>& visit);

std::uint64_t count_instances(InstanceKind kind, int r, bool up_to_iso);

// splitmix64: the full 64-bit output sequence is part of the report format
// and must never change.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

// Seed-determined instance (r <= 12):
//   graph      — one draw per vertex pair in lexicographic order, the pair is
//                an edge iff the top bit of the draw is set;
//   complex    — r+2 draws, each mapped to a nonzero subset of [r] by
//                1 + (draw mod (2^r - 1)); facets are the maximal subsets;
//   hypergraph — same draws, edges are the minimal subsets.
Instance random_instance(InstanceKind kind, int r, std::uint64_t seed);

// The complex of independent sets of the uniform matroid U_{k,m}: all
// k-subsets of [m] as facets.  Requires 1 <= k <= m.
SimplicialComplex uniform_matroid_complex(int k, int m);

}  // namespace srpow
