#pragma once

#include <cstdint>
#include <vector>

#include "srpow/field.hpp"
#include "srpow/rational.hpp"

namespace srpow {

// Dense matrix with exact rational entries. Row-major.
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  ExactMatrix() = default;
  ExactMatrix(int m, int n) : rows(m), cols(n), a(static_cast<size_t>(m) * n) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

// Rank over the given field. Characteristic 0 uses fraction-free (Bareiss)
// elimination over integers after clearing row denominators; characteristic p
// reduces entries mod p (throws if a denominator vanishes mod p).
int rank(const ExactMatrix& m, const FieldSpec& field);

// Integer fast path used by the homology kernel: same semantics as rank() on
// the matrix with these entries. Tries 64-bit fraction-free elimination and
// falls back to arbitrary precision on overflow.
int rank_int(const std::vector<std::int64_t>& entries, int rows, int cols,
             const FieldSpec& field);

// Arbitrary-precision fraction-free rank, exposed for cross-checking the
// 64-bit path in tests.
int rank_bigint(std::vector<BigInt> entries, int rows, int cols);

}  // namespace srpow
