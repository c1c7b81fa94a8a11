#pragma once

#include <cstdint>
#include <vector>

#include "lefschetz/monomials.hpp"
#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// Nonzero homogeneous linear form, as its coefficient vector.
struct LinearForm {
  std::vector<std::uint32_t> coefficients;

  int vars() const { return static_cast<int>(coefficients.size()); }
};

/// Homogeneous polynomial of fixed degree: coefficients indexed by the
/// descending-lex MonomialBasis(vars, degree).
struct DegreeSlice {
  int vars = 0;
  int degree = 0;
  std::vector<std::uint32_t> coefficients;

  bool is_zero() const;
};

/// Highest total degree the factorial tables cover.
constexpr int kMaxExpansionDegree = 60;

/// ell^k by the multinomial theorem; requires 1 <= k <= kMaxExpansionDegree.
DegreeSlice expand_power(const LinearForm& ell, int k, const PrimeField& field);

/// Exact convolution product; degrees add. Throws std::invalid_argument on a
/// variable-count mismatch.
DegreeSlice multiply(const DegreeSlice& a, const DegreeSlice& b,
                     const PrimeField& field);

/// a * x^m for a monomial m: a pure index shift of the coefficients.
DegreeSlice monomial_multiple(const DegreeSlice& a, const Monomial& m);

DegreeSlice add(const DegreeSlice& a, const DegreeSlice& b,
                const PrimeField& field);
DegreeSlice scale(const DegreeSlice& a, std::uint32_t c,
                  const PrimeField& field);

/// The derivative functional entry: (d^beta x^alpha)(point). Zero unless
/// beta <= alpha componentwise; otherwise the product of falling factorials
/// alpha_i * (alpha_i - 1) * ... * (alpha_i - beta_i + 1) times
/// point^(alpha - beta).
std::uint32_t derivative_row_entry(const Monomial& alpha, const Monomial& beta,
                                   const std::vector<std::uint32_t>& point,
                                   const PrimeField& field);

/// Applies the functional d^beta(.)(point) to a whole slice.
std::uint32_t apply_derivative(const DegreeSlice& f, const Monomial& beta,
                               const std::vector<std::uint32_t>& point,
                               const PrimeField& field);

std::uint32_t evaluate(const DegreeSlice& f,
                       const std::vector<std::uint32_t>& point,
                       const PrimeField& field);

DegreeSlice slice_from_linear_form(const LinearForm& ell);

}  // namespace lefschetz
