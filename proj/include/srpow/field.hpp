#pragma once

#include <cstdint>
#include <stdexcept>

namespace srpow {

// Coefficient field for all homological computations: Q (characteristic 0)
// or GF(p) for a prime p < 2^31. Dimensions over GF(p) are computed with
// exact modular arithmetic, never floats.
struct FieldSpec {
  std::int64_t characteristic = 0;

  static bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime_field(std::int64_t p) {
    if (p >= (std::int64_t{1} << 31) || !is_prime(p))
      throw std::invalid_argument("characteristic must be 0 or a prime < 2^31");
    return FieldSpec{p};
  }

  static FieldSpec of_characteristic(std::int64_t c) {
    return c == 0 ? rationals() : prime_field(c);
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace srpow
