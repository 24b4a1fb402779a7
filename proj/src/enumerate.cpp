#include "srpow/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "srpow/ideal.hpp"

namespace srpow {

namespace {

constexpr int kMaxEnumGraph = 7;
constexpr int kMaxEnumAntichain = 5;
constexpr int kMaxRandom = 12;

void check_r(InstanceKind kind, int r, int limit, const char* what) {
  if (r < 1 || r > limit)
    throw std::invalid_argument(std::string(what) + " enumeration supports 1 <= r <= " +
                                std::to_string(limit) + ", got r = " + std::to_string(r) +
                                " for kind " + to_string(kind));
}

std::vector<Mask> pair_masks(int r) {
  std::vector<Mask> pairs;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) pairs.push_back((Mask{1} << i) | (Mask{1} << j));
  return pairs;
}

bool comparable(Mask a, Mask b) { return (a & b) == a || (a & b) == b; }

// Visits every antichain of nonempty subsets of [r] exactly once, extending
// by numerically larger masks only.
void antichain_dfs(int r, Mask from, std::vector<Mask>& chosen,
                   const std::function<void(const std::vector<Mask>&)>& emit) {
  const Mask end = Mask{1} << r;
  for (Mask c = from; c < end; ++c) {
    bool ok = true;
    for (Mask m : chosen)
      if (comparable(m, c)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(c);
    emit(chosen);
    antichain_dfs(r, c + 1, chosen, emit);
    chosen.pop_back();
  }
}

std::vector<Mask> min_key_over_permutations(const std::vector<Mask>& sets, int r) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::optional<std::vector<Mask>> best;
  std::vector<Mask> relabeled(sets.size());
  do {
    for (std::size_t k = 0; k < sets.size(); ++k) {
      Mask image = 0;
      Mask m = sets[k];
      while (m) {
        const int bit = std::countr_zero(m);
        m &= m - 1;
        image |= Mask{1} << perm[static_cast<std::size_t>(bit)];
      }
      relabeled[k] = image;
    }
    std::sort(relabeled.begin(), relabeled.end(), canon_less);
    if (!best ||
        std::lexicographical_compare(relabeled.begin(), relabeled.end(), best->begin(),
                                     best->end(), canon_less))
      best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Complex: return "complex";
    case InstanceKind::Graph: return "graph";
    case InstanceKind::Hypergraph: return "hypergraph";
  }
  return "?";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view text) {
  if (text == "complex") return InstanceKind::Complex;
  if (text == "graph") return InstanceKind::Graph;
  if (text == "hypergraph") return InstanceKind::Hypergraph;
  return std::nullopt;
}

SimplicialComplex Instance::complex() const {
  if (kind != InstanceKind::Complex)
    throw std::logic_error("instance is not a simplicial complex");
  return SimplicialComplex::from_facets(r, sets);
}

Graph Instance::graph() const {
  if (kind != InstanceKind::Graph) throw std::logic_error("instance is not a graph");
  return Graph::from_edges(r, sets);
}

Hypergraph Instance::hypergraph() const {
  if (kind == InstanceKind::Complex)
    throw std::logic_error("instance is not a hypergraph");
  return Hypergraph::from_edges(r, sets);
}

SimplicialComplex Instance::associated_complex() const {
  switch (kind) {
    case InstanceKind::Complex: return complex();
    case InstanceKind::Graph: return graph().independence_complex();
    case InstanceKind::Hypergraph: {
      const Hypergraph h = hypergraph();
      std::vector<Exponents> gens;
      for (Mask e : h.edges()) {
        Exponents exps(static_cast<std::size_t>(r), 0);
        for (int v : vertices_of(e)) exps[static_cast<std::size_t>(v - 1)] = 1;
        gens.push_back(exps);
      }
      return complex_of(MonomialIdeal::from_generators(r, gens));
    }
  }
  throw std::logic_error("unknown instance kind");
}

std::vector<Mask> Instance::canonical_key() const {
  return min_key_over_permutations(sets, r);
}

bool Instance::is_canonical_representative() const { return canonical_key() == sets; }

void enumerate_instances(InstanceKind kind, int r, bool up_to_iso,
                         const std::function<void(const Instance&)>& visit) {
  const auto emit = [&](Instance inst) {
    if (!up_to_iso || inst.is_canonical_representative()) visit(inst);
  };

  if (kind == InstanceKind::Graph) {
    check_r(kind, r, kMaxEnumGraph, "graph");
    const std::vector<Mask> pairs = pair_masks(r);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t s = 0; s < total; ++s) {
      std::vector<Mask> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (s & (std::uint64_t{1} << k)) edges.push_back(pairs[k]);
      emit(Instance{kind, r, Graph::from_edges(r, edges).edges()});
    }
    return;
  }

  check_r(kind, r, kMaxEnumAntichain, to_string(kind).c_str());
  if (kind == InstanceKind::Complex)
    emit(Instance{kind, r, {Mask{0}}});
  else
    emit(Instance{kind, r, {}});
  std::vector<Mask> chosen;
  antichain_dfs(r, Mask{1}, chosen, [&](const std::vector<Mask>& sets) {
    if (kind == InstanceKind::Complex)
      emit(Instance{kind, r, SimplicialComplex::from_facets(r, sets).facets()});
    else
      emit(Instance{kind, r, Hypergraph::from_edges(r, sets).edges()});
  });
}

std::uint64_t count_instances(InstanceKind kind, int r, bool up_to_iso) {
  std::uint64_t count = 0;
  enumerate_instances(kind, r, up_to_iso, [&](const Instance&) { ++count; });
  return count;
}

Instance random_instance(InstanceKind kind, int r, std::uint64_t seed) {
  if (r < 1 || r > kMaxRandom)
    throw std::invalid_argument("random instances support 1 <= r <= " +
                                std::to_string(kMaxRandom) + ", got r = " +
                                std::to_string(r));
  SplitMix64 rng(seed);
  if (kind == InstanceKind::Graph) {
    std::vector<Mask> edges;
    for (Mask pair : pair_masks(r))
      if (rng.next() >> 63) edges.push_back(pair);
    return Instance{kind, r, Graph::from_edges(r, edges).edges()};
  }
  const std::uint64_t nonzero = (std::uint64_t{1} << r) - 1;
  std::vector<Mask> draws;
  for (int k = 0; k < r + 2; ++k)
    draws.push_back(static_cast<Mask>(1 + rng.next() % nonzero));
  if (kind == InstanceKind::Complex)
    return Instance{kind, r, SimplicialComplex::from_facets(r, draws).facets()};
  std::vector<Mask> minimal;
  for (Mask m : draws) {
    bool keep = true;
    for (Mask other : draws)
      if (other != m && (other & m) == other) {
        keep = false;
        break;
      }
    if (keep && std::find(minimal.begin(), minimal.end(), m) == minimal.end())
      minimal.push_back(m);
  }
  return Instance{kind, r, Hypergraph::from_edges(r, minimal).edges()};
}

SimplicialComplex uniform_matroid_complex(int k, int m) {
  if (k < 1 || k > m) throw std::invalid_argument("uniform matroid requires 1 <= k <= m");
  std::vector<Mask> facets;
  for_each_combination(m, k, [&](const std::vector<int>& idx) {
    Mask subset = 0;
    for (int i : idx) subset |= Mask{1} << i;
    facets.push_back(subset);
  });
  return SimplicialComplex::from_facets(m, facets);
}

}  // namespace srpow
