#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lefschetz/linalg.hpp"
#include "lefschetz/poly.hpp"
#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// The ideal I = (L_1^{k_1}, ..., L_s^{k_s}) in `vars` variables, together
/// with the field and the seed the forms were drawn from.
struct PowerIdealSpec {
  int vars = 0;
  std::vector<std::pair<LinearForm, int>> generators;
  std::uint64_t seed = 0;
  PrimeField field;

  /// Uniform generator power; throws when the powers are mixed.
  int uniform_power() const;
};

/// `count` forms with uniformly random nonzero coefficient vectors, all
/// raised to `power`, drawn from mt19937_64(seed).
PowerIdealSpec random_power_ideal(int vars, int count, int power,
                                  std::uint64_t seed, const PrimeField& field);

PowerIdealSpec with_extra_generator(const PowerIdealSpec& spec,
                                    const LinearForm& ell, int power);

/// Value of the haystack instance studied throughout: 8 general cubes in 7
/// variables, plus the general multiplication form drawn after them.
struct SpecWithForm {
  PowerIdealSpec spec;
  LinearForm ell;
};
SpecWithForm eight_cubes_instance(std::uint64_t seed, const PrimeField& field);

/// Row source spanning the degree-d slice of the ideal: one row per pair
/// (generator i with k_i <= d, monomial m of degree d - k_i), in generator
/// order then basis order. Row = coefficients of m * L_i^{k_i} in degree d.
class IdealSliceRows final : public RowSource {
 public:
  IdealSliceRows(const PowerIdealSpec& spec, int degree);
  std::size_t cols() const override { return cols_; }
  bool next(std::vector<std::uint32_t>& row) override;
  std::size_t total_rows() const { return total_rows_; }

 private:
  struct GenState {
    DegreeSlice power;          // L_i^{k_i}
    std::vector<std::size_t> support;    // indices with nonzero coefficient
    std::vector<Monomial> support_mono;  // their exponent vectors
    int coeff_degree;           // d - k_i
  };
  int vars_, degree_;
  std::size_t cols_;
  std::vector<GenState> gens_;
  std::size_t gen_idx_ = 0;
  Monomial current_;
  bool current_valid_ = false;
  std::size_t total_rows_ = 0;

  void start_generator();
};

/// dim (R/I)_d = dim R_d - rank of the degree-d ideal slice.
long long hilbert_dimension(const PowerIdealSpec& spec, int d);

struct HilbertFunction {
  std::vector<long long> dims;  // indexed by degree, starting at 0
  bool vanished = false;        // stopped at an observed zero (else cap)
  int cap = 0;

  long long at(int d) const;    // zero-extended past the computed range
  int socle_degree() const;     // largest d with dims[d] > 0; -1 if none
};

/// Dimensions per degree until the first observed zero or the cap.
HilbertFunction hilbert_function(const PowerIdealSpec& spec, int cap);

struct SyzygyCount {
  int coefficient_degree = 0;
  long long dimension = 0;          // nullity of (f_i) -> sum f_i L_i^k
  long long koszul_lower_bound = 0;  // C(s,2) * dim R_{t-k} for t >= k
};

/// Requires a uniform generator power.
SyzygyCount syzygy_dimension(const PowerIdealSpec& spec, int t);

/// The Koszul syzygies at coefficient degree t: for i < j and each monomial m
/// of degree t - k, the tuple with m L_j^k in slot i and -m L_i^k in slot j.
/// Every vector is checked to lie in the kernel and the whole set is checked
/// linearly independent. For t < k the list is empty and *below_power, when
/// given, is set.
std::vector<std::vector<std::uint32_t>> koszul_basis(
    const PowerIdealSpec& spec, int t, bool* below_power = nullptr);

/// Materialized syzygy-map matrix: rows indexed like IdealSliceRows at degree
/// t + k (slot-major), columns by the degree-(t+k) monomial basis.
DenseMatrix syzygy_matrix(const PowerIdealSpec& spec, int t);

struct LefschetzStep {
  int degree = 0;
  long long dim_source = 0, dim_target = 0;
  long long rank = 0, kernel_dim = 0, coker_dim = 0;
  bool maximal_rank = false;
};

/// The multiplication step x ell : A_d -> A_{d+1}. The cokernel comes from
/// the extended ideal (ell adjoined with power 1); for d <= 4 the result is
/// cross-checked against the explicit quotient-basis matrix of the map.
LefschetzStep lefschetz_step(const PowerIdealSpec& spec, const LinearForm& ell,
                             int d);

/// The quotient-basis path on its own (standard monomials of A_d and A_{d+1},
/// explicit matrix of x ell, rank over the field).
LefschetzStep lefschetz_step_direct(const PowerIdealSpec& spec,
                                    const LinearForm& ell, int d);

struct WlpProfile {
  std::vector<LefschetzStep> steps;  // one per degree 0..cap
  std::vector<int> failing_degrees;  // degrees without maximal rank
  HilbertFunction hilbert;
};

/// Steps for every degree 0..cap. Degrees past the observed socle are
/// trivially maximal and cost nothing.
WlpProfile wlp_profile(const PowerIdealSpec& spec, const LinearForm& ell,
                       int cap);

}  // namespace lefschetz
