#pragma once

#include <cstdint>
#include <cstddef>

namespace lefschetz {

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic in Z/p for a prime modulus p with 10^6 < p <= 2^31 - 1.
/// Residues are canonical in [0, p) and stored as uint32_t; a product of two
/// residues always fits in 64 bits. The default modulus 2^31 - 1 is Mersenne,
/// which the elimination kernels reduce without division.
class PrimeField {
public:
  static constexpr std::uint64_t kDefaultModulus = 2147483647ull;  // 2^31 - 1
  static constexpr std::uint64_t kMinModulus = 1000000ull;

  explicit PrimeField(std::uint64_t modulus = kDefaultModulus);

  std::uint64_t modulus() const { return p_; }

  /// Reduces any x < 2^63 to [0, p).
  std::uint32_t reduce64(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    if (r >= p_) r -= p_;
    return static_cast<std::uint32_t>(r);
  }

  /// Canonical residue of an arbitrary signed integer.
  std::uint32_t reduce_int(long long x) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return reduce64(std::uint64_t(a) * b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  /// Multiplicative inverse; throws std::domain_error for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
  std::uint64_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
};

/// Free-function form of PrimeField::inv; same error contract.
std::uint32_t modular_inverse(std::uint32_t a, const PrimeField& field);

}  // namespace lefschetz
