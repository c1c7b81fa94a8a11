#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lefschetz/poly.hpp"
#include "lefschetz/prime_field.hpp"

namespace lefschetz {

// mt19937_64 output is pinned by the standard, so seeded draws are portable.
// Distributions are not; sampling below goes through explicit rejection.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t bound = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= bound);
  return x % n;
}

inline std::uint32_t random_residue(std::mt19937_64& rng,
                                    const PrimeField& field) {
  return static_cast<std::uint32_t>(uniform_below(rng, field.modulus()));
}

/// Uniform coefficient vector, redrawn until not identically zero.
inline std::vector<std::uint32_t> random_nonzero_vector(
    std::mt19937_64& rng, int length, const PrimeField& field) {
  std::vector<std::uint32_t> v(length);
  for (;;) {
    bool nonzero = false;
    for (auto& c : v) {
      c = random_residue(rng, field);
      nonzero |= (c != 0);
    }
    if (nonzero) return v;
  }
}

inline LinearForm random_linear_form(std::mt19937_64& rng, int vars,
                                     const PrimeField& field) {
  return LinearForm{random_nonzero_vector(rng, vars, field)};
}

}  // namespace lefschetz
