#include "lefschetz/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace lefschetz {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Witness set exact for all n < 3.3e24 (Sorenson–Webster).
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus > kDefaultModulus) {
    throw std::domain_error("modulus exceeds 2^31 - 1: " +
                            std::to_string(modulus));
  }
  if (modulus <= kMinModulus) {
    throw std::domain_error("modulus must exceed 10^6: " +
                            std::to_string(modulus));
  }
  if (!is_prime_u64(modulus)) {
    throw std::domain_error("modulus is not prime: " + std::to_string(modulus));
  }
  // floor(2^64/p) == floor((2^64-1)/p) since p does not divide 2^64.
  barrett_ = ~std::uint64_t(0) / p_;
}

std::uint32_t PrimeField::reduce_int(long long x) const {
  long long r = x % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  std::uint64_t base = a % p_;
  while (e) {
    if (e & 1) r = reduce64(r * base);
    base = reduce64(std::uint64_t(base) * base);
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Extended Euclid on (a, p).
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(p_), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(p_);
  return static_cast<std::uint32_t>(t);
}

std::uint32_t modular_inverse(std::uint32_t a, const PrimeField& field) {
  return field.inv(a);
}

}  // namespace lefschetz
