#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/poly.hpp"
#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// Point of P^n as an arbitrary nonzero coordinate vector; computations are
/// invariant under rescaling, so no normalization is performed.
struct ProjectivePoint {
  std::vector<std::uint32_t> coordinates;
};

/// Degree-d hypersurfaces of P^n through the assigned fat points: a point of
/// multiplicity m imposes vanishing of all partials of order < m.
struct FatPointSystem {
  int n = 0;  // projective dimension
  int d = 0;  // degree
  std::vector<std::pair<ProjectivePoint, int>> assignments;
  PrimeField field;
};

/// The dual point of a linear form: its coefficient vector read as
/// coordinates. Throws std::domain_error on a zero form.
std::vector<ProjectivePoint> dual_points(const std::vector<LinearForm>& forms);

struct ExpectedDimension {
  long long clamped = 0;  // max(0, raw)
  long long raw = 0;      // monomial_count(n+1, d) - sum of condition counts
};
ExpectedDimension expected_dimension(int n, int d,
                                     const std::vector<int>& multiplicities);

/// Condition rows: for each assignment in order, the functionals d^beta at
/// the point for |beta| < m, beta enumerated by total degree then basis
/// order. Columns are the degree-d monomial basis in n+1 variables.
DenseMatrix condition_matrix(const FatPointSystem& system);

struct SystemDimension {
  long long actual = 0;
  long long expected = 0;      // clamped at zero
  long long raw_expected = 0;  // may be negative
  long long defect = 0;        // actual - expected
  long long conditions_imposed = 0;  // rank of the condition matrix
};
SystemDimension linear_system_dimension(const FatPointSystem& system);

/// A basis of the system itself (right kernel of the condition matrix), as
/// degree slices; canonical and deterministic.
std::vector<DegreeSlice> system_basis(const FatPointSystem& system);

/// Reference classification of general double-point systems that fail to
/// impose independent conditions: d = 2 with 2 <= s <= n, plus the sporadic
/// (d, n, s) cases (3,4,7), (4,2,5), (4,3,9), (4,4,14).
bool ah_exceptional(int n, int d, int s);

/// Same lookup keyed by a concrete system; throws std::domain_error unless
/// every multiplicity equals 2.
bool ah_exceptional(const FatPointSystem& system);

ProjectivePoint random_projective_point(std::mt19937_64& rng, int n,
                                        const PrimeField& field);
std::vector<ProjectivePoint> random_projective_points(std::mt19937_64& rng,
                                                      int count, int n,
                                                      const PrimeField& field);

}  // namespace lefschetz
