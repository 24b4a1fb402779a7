#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace srpow {

// Subsets of the ground set {1..r} as bitmasks, vertex v <-> bit (v-1).
// Ground sets are capped at 16 vertices; every enumeration routine in this
// project walks 2^r masks somewhere, so larger r is refused up front.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int r) { return (Mask{1} << r) - 1; }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline bool has_vertex(Mask m, int v) { return (m >> (v - 1)) & 1u; }

inline Mask vertex_mask(int v) { return Mask{1} << (v - 1); }

inline std::vector<int> vertices_of(Mask m) {
  std::vector<int> vs;
  while (m) {
    Mask low = m & (~m + 1);
    vs.push_back(std::countr_zero(low) + 1);
    m ^= low;
  }
  return vs;
}

inline Mask mask_of(const std::vector<int>& vs, int r) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 1 || v > r) throw std::invalid_argument("vertex out of range 1..r");
    m |= vertex_mask(v);
  }
  return m;
}

// Lexicographic order on the ascending vertex sequences of two sets.
// The sequences agree on all elements below the lowest differing bit; the
// owner of that bit comes first unless the other set is a proper prefix.
inline bool lex_less(Mask a, Mask b) {
  if (a == b) return false;
  Mask d = a ^ b;
  Mask low = d & (~d + 1);
  Mask at_or_above = ~(low - 1);
  if (a & low) return (b & at_or_above) != 0;  // b exhausted -> b is a prefix of a
  return (a & at_or_above) == 0;               // a exhausted -> a is a prefix of b
}

// (size, lex) order used for canonical facet lists and face tables.
inline bool canon_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  Mask d = a ^ b;
  Mask low = d & (~d + 1);
  return (a & low) != 0;
}

// Visit all submasks of m, including m itself and 0, in decreasing value.
template <typename F>
inline void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

// Visit all k-element index subsets of {0..n-1} in lexicographic order.
template <typename F>
inline void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace srpow
