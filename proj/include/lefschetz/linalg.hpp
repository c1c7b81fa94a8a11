#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// Row-major dense matrix over a prime field. Zero rows/columns are allowed.
class DenseMatrix {
public:
  DenseMatrix(std::size_t rows, std::size_t cols, PrimeField field);
  static DenseMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows,
                               std::size_t cols, PrimeField field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::uint32_t v) {
    entries_[i * cols_ + j] = v;
  }
  const std::uint32_t* row_ptr(std::size_t i) const {
    return entries_.data() + i * cols_;
  }
  std::uint32_t* row_ptr(std::size_t i) { return entries_.data() + i * cols_; }
  std::vector<std::uint32_t> row_copy(std::size_t i) const;

private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<std::uint32_t> entries_;
};

DenseMatrix transpose(const DenseMatrix& m);

struct RankResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  // ascending, length == rank
  std::size_t nullity = 0;                 // cols - rank
  bool early_exit = false;  // stream abandoned once rank == cols
  std::size_t rows_seen = 0;
};

/// Ordered source of matrix rows; rows are produced once, in a fixed order.
class RowSource {
public:
  virtual ~RowSource() = default;
  virtual std::size_t cols() const = 0;
  /// Writes the next row (length cols()) into `row`; false when exhausted.
  virtual bool next(std::vector<std::uint32_t>& row) = 0;
};

class MatrixRowSource final : public RowSource {
public:
  explicit MatrixRowSource(const DenseMatrix& m) : m_(m) {}
  std::size_t cols() const override { return m_.cols(); }
  bool next(std::vector<std::uint32_t>& row) override;

private:
  const DenseMatrix& m_;
  std::size_t i_ = 0;
};

/// Streaming row-echelon accumulator. Incoming rows are reduced against the
/// retained pivot rows (pivots normalized to 1, sorted by pivot column); a row
/// that survives is retained. Pivot selection is the first nonzero entry of
/// the reduced row, which makes results bit-identical across runs.
///
/// An optional augmentation of `aug` trailing entries is carried through every
/// elimination; it is how kernel vectors are extracted.
class RowEchelon {
public:
  RowEchelon(PrimeField field, std::size_t cols, std::size_t aug = 0);

  /// Reduces `row` (length cols + aug) in place. Returns true when the row
  /// was retained as a new pivot; false when its matrix part vanished (the
  /// reduced augmentation is left in `row`).
  bool absorb(std::vector<std::uint32_t>& row);

  std::size_t rank() const { return pivot_cols_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivot_cols_; }
  const std::vector<std::vector<std::uint32_t>>& pivot_rows() const {
    return rows_;
  }
  const PrimeField& field() const { return field_; }

  /// Back-eliminates every pivot column from the rows above it, producing the
  /// reduced row echelon form.
  void back_substitute();

private:
  PrimeField field_;
  std::size_t cols_, aug_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivot_cols_;  // ascending

  enum class Kernel { kMersenne31, kPseudoMersenne31, kBarrett };
  Kernel kernel_;
  std::uint64_t pm_c_ = 0;  // 2^31 mod p for the pseudo-Mersenne kernel

  void eliminate(std::uint32_t* row, const std::uint32_t* piv, std::size_t n,
                 std::uint64_t factor) const;
  void scale(std::uint32_t* row, std::size_t n, std::uint64_t s) const;
};

/// Rank by Gaussian elimination with deterministic first-nonzero pivoting.
RankResult rank(const DenseMatrix& m);

/// Rank of a streamed row set; memory is bounded by the retained pivot rows.
/// Stops consuming rows once rank == ncols and reports that in the result.
/// Throws std::invalid_argument when the source width differs from ncols.
RankResult rank_streaming(RowSource& rows, std::size_t ncols,
                          const PrimeField& field);

/// Left kernel: all v with v * M = 0, as the canonical reduced-echelon basis.
std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m);

/// Reduced row echelon form with the transform discarded.
struct Echelon {
  std::vector<std::vector<std::uint32_t>> rows;  // pivots normalized to 1
  std::vector<std::size_t> pivot_cols;
};
Echelon reduced_row_echelon(const DenseMatrix& m);

/// Reduces `row` against an RREF, in place (row length == echelon width).
void reduce_against(const Echelon& ech, std::vector<std::uint32_t>& row,
                    const PrimeField& field);

/// Stacks row vectors into a matrix and computes their rank.
RankResult span_rank(const std::vector<std::vector<std::uint32_t>>& rows,
                     std::size_t cols, const PrimeField& field);

}  // namespace lefschetz
