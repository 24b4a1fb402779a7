#include "srpow/matrix.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace srpow {
namespace {

// One-step fraction-free elimination (Bareiss). Divisions are exact for any
// pivot choice because every intermediate entry is, up to sign, a minor of
// the input bordered by the pivot rows/columns chosen so far.
std::optional<int> rank_int64(std::vector<std::int64_t> a, int rows, int cols) {
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<size_t>(i) * cols + j]; };
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t prev = 1;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int i = rk; i < rows; ++i)
      if (at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rk, j));
    std::int64_t p = at(rk, c);
    for (int i = rk + 1; i < rows; ++i) {
      std::int64_t f = at(i, c);
      for (int j = c; j < cols; ++j) {
        __int128 num = static_cast<__int128>(at(rk, j)) * f;
        __int128 val = (static_cast<__int128>(at(i, j)) * p - num) / prev;
        if (val > kMax || val < -kMax) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(val);
      }
      at(i, c) = 0;
    }
    prev = p;
    ++rk;
  }
  return rk;
}

int rank_modp(std::vector<std::int64_t> a, int rows, int cols, std::int64_t p) {
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<size_t>(i) * cols + j]; };
  for (auto& x : a) {
    x %= p;
    if (x < 0) x += p;
  }
  auto inv = [&](std::int64_t x) {
    // Fermat: p prime, x != 0 mod p.
    std::int64_t e = p - 2, b = x, r = 1;
    while (e) {
      if (e & 1) r = (__int128(r) * b) % p;
      b = (__int128(b) * b) % p;
      e >>= 1;
    }
    return r;
  };
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int i = rk; i < rows; ++i)
      if (at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rk, j));
    std::int64_t pinv = inv(at(rk, c));
    for (int i = rk + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      std::int64_t f = (__int128(at(i, c)) * pinv) % p;
      for (int j = c; j < cols; ++j) {
        at(i, j) = (at(i, j) - __int128(f) * at(rk, j)) % p;
        if (at(i, j) < 0) at(i, j) += p;
      }
    }
    ++rk;
  }
  return rk;
}

}  // namespace

int rank_bigint(std::vector<BigInt> a, int rows, int cols) {
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * cols + j]; };
  BigInt prev = 1;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int i = rk; i < rows; ++i)
      if (at(i, c) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != rk)
      for (int j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rk, j));
    BigInt p = at(rk, c);
    for (int i = rk + 1; i < rows; ++i) {
      BigInt f = at(i, c);
      for (int j = c; j < cols; ++j) at(i, j) = (at(i, j) * p - at(rk, j) * f) / prev;
      at(i, c) = 0;
    }
    prev = p;
    ++rk;
  }
  return rk;
}

int rank_int(const std::vector<std::int64_t>& entries, int rows, int cols,
             const FieldSpec& field) {
  if (rows == 0 || cols == 0) return 0;
  if (field.characteristic != 0) return rank_modp(entries, rows, cols, field.characteristic);
  if (auto rk = rank_int64(entries, rows, cols)) return *rk;
  std::vector<BigInt> big(entries.begin(), entries.end());
  return rank_bigint(std::move(big), rows, cols);
}

int rank(const ExactMatrix& m, const FieldSpec& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.characteristic != 0) {
    const std::int64_t p = field.characteristic;
    auto inv = [&](std::int64_t x) {
      std::int64_t e = p - 2, b = x, r = 1;
      while (e) {
        if (e & 1) r = (__int128(r) * b) % p;
        b = (__int128(b) * b) % p;
        e >>= 1;
      }
      return r;
    };
    std::vector<std::int64_t> small(static_cast<size_t>(m.rows) * m.cols);
    for (size_t k = 0; k < small.size(); ++k) {
      std::int64_t den = static_cast<std::int64_t>(denominator(m.a[k]) % p);
      if (den == 0) throw std::invalid_argument("matrix entry denominator vanishes mod p");
      std::int64_t num = static_cast<std::int64_t>(numerator(m.a[k]) % p);
      if (num < 0) num += p;
      small[k] = (__int128(num) * inv(den)) % p;
    }
    return rank_int(small, m.rows, m.cols, field);
  }
  std::vector<BigInt> big(static_cast<size_t>(m.rows) * m.cols);
  BigInt bound = BigInt(std::numeric_limits<std::int64_t>::max()) >> 2;
  bool fits64 = true;
  for (int i = 0; i < m.rows; ++i) {
    BigInt l = 1;
    for (int j = 0; j < m.cols; ++j) l = lcm(l, denominator(m.at(i, j)));
    for (int j = 0; j < m.cols; ++j) {
      const Rational& q = m.at(i, j);
      BigInt v = numerator(q) * (l / denominator(q));
      if (abs(v) > bound) fits64 = false;
      big[static_cast<size_t>(i) * m.cols + j] = v;
    }
  }
  if (fits64) {
    std::vector<std::int64_t> small(big.size());
    for (size_t k = 0; k < big.size(); ++k) small[k] = static_cast<std::int64_t>(big[k]);
    return rank_int(small, m.rows, m.cols, FieldSpec::rationals());
  }
  return rank_bigint(std::move(big), m.rows, m.cols);
}

}  // namespace srpow
