#include "lefschetz/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

namespace {

constexpr std::uint64_t kM31 = 2147483647ull;  // 2^31 - 1

struct ReduceM31 {
  std::uint64_t operator()(std::uint64_t x) const {
    x = (x & kM31) + (x >> 31);
    x = (x & kM31) + (x >> 31);
    return x >= kM31 ? x - kM31 : x;
  }
};

// p = 2^31 - c with small c; 2^31 == c (mod p).
struct ReducePM31 {
  std::uint64_t p, c;
  std::uint64_t operator()(std::uint64_t x) const {
    x = (x & kM31) + c * (x >> 31);
    x = (x & kM31) + c * (x >> 31);
    x = (x & kM31) + c * (x >> 31);
    return x >= p ? x - p : x;
  }
};

struct ReduceBarrett {
  std::uint64_t p, m;
  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * m) >> 64);
    std::uint64_t r = x - q * p;
    return r >= p ? r - p : r;
  }
};

// row[j] -= f * piv[j], computed as row[j] + f * (p - piv[j]); all operands
// stay below 2^63 so a single reduction per entry suffices.
template <class Reduce>
void axpy_suffix(std::uint32_t* row, const std::uint32_t* piv, std::size_t n,
                 std::uint64_t f, std::uint64_t p, Reduce red) {
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t t = row[j] + f * (p - piv[j]);
    row[j] = static_cast<std::uint32_t>(red(t));
  }
}

template <class Reduce>
void scale_suffix(std::uint32_t* row, std::size_t n, std::uint64_t s,
                  Reduce red) {
  for (std::size_t j = 0; j < n; ++j) {
    row[j] = static_cast<std::uint32_t>(red(row[j] * s));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, 0) {}

DenseMatrix DenseMatrix::from_rows(
    const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols,
    PrimeField field) {
  DenseMatrix m(rows.size(), cols, field);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("row length mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] >= field.modulus()) {
        throw std::invalid_argument("entry not a canonical residue");
      }
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::vector<std::uint32_t> DenseMatrix::row_copy(std::size_t i) const {
  return std::vector<std::uint32_t>(row_ptr(i), row_ptr(i) + cols_);
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix t(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      t.set(j, i, m.at(i, j));
    }
  }
  return t;
}

bool MatrixRowSource::next(std::vector<std::uint32_t>& row) {
  if (i_ >= m_.rows()) return false;
  row.assign(m_.row_ptr(i_), m_.row_ptr(i_) + m_.cols());
  ++i_;
  return true;
}

RowEchelon::RowEchelon(PrimeField field, std::size_t cols, std::size_t aug)
    : field_(field), cols_(cols), aug_(aug) {
  std::uint64_t p = field_.modulus();
  if (p == kM31) {
    kernel_ = Kernel::kMersenne31;
  } else if (p > (1ull << 30) && (1ull << 31) - p < (1ull << 15)) {
    kernel_ = Kernel::kPseudoMersenne31;
    pm_c_ = (1ull << 31) - p;
  } else {
    kernel_ = Kernel::kBarrett;
  }
}

void RowEchelon::eliminate(std::uint32_t* row, const std::uint32_t* piv,
                           std::size_t n, std::uint64_t f) const {
  std::uint64_t p = field_.modulus();
  switch (kernel_) {
    case Kernel::kMersenne31:
      axpy_suffix(row, piv, n, f, p, ReduceM31{});
      break;
    case Kernel::kPseudoMersenne31:
      axpy_suffix(row, piv, n, f, p, ReducePM31{p, pm_c_});
      break;
    case Kernel::kBarrett:
      axpy_suffix(row, piv, n, f, p,
                  ReduceBarrett{p, ~std::uint64_t(0) / p});
      break;
  }
}

void RowEchelon::scale(std::uint32_t* row, std::size_t n,
                       std::uint64_t s) const {
  std::uint64_t p = field_.modulus();
  switch (kernel_) {
    case Kernel::kMersenne31:
      scale_suffix(row, n, s, ReduceM31{});
      break;
    case Kernel::kPseudoMersenne31:
      scale_suffix(row, n, s, ReducePM31{p, pm_c_});
      break;
    case Kernel::kBarrett:
      scale_suffix(row, n, s, ReduceBarrett{p, ~std::uint64_t(0) / p});
      break;
  }
}

bool RowEchelon::absorb(std::vector<std::uint32_t>& row) {
  const std::size_t width = cols_ + aug_;
  if (row.size() != width) {
    throw std::invalid_argument("row length mismatch");
  }
  std::size_t pi = 0;
  std::size_t j = 0;
  while (j < cols_) {
    if (row[j] == 0) {
      ++j;
      continue;
    }
    while (pi < pivot_cols_.size() && pivot_cols_[pi] < j) ++pi;
    if (pi < pivot_cols_.size() && pivot_cols_[pi] == j) {
      eliminate(row.data() + j, rows_[pi].data() + j, width - j, row[j]);
      ++j;
      ++pi;
    } else {
      // New pivot: normalize so the leading entry is 1 and retain.
      std::uint64_t s = field_.inv(row[j]);
      scale(row.data() + j, width - j, s);
      rows_.insert(rows_.begin() + pi, std::move(row));
      pivot_cols_.insert(pivot_cols_.begin() + pi, j);
      row = std::vector<std::uint32_t>();
      return true;
    }
  }
  return false;
}

void RowEchelon::back_substitute() {
  for (std::size_t i = rank(); i-- > 0;) {
    std::size_t c = pivot_cols_[i];
    for (std::size_t e = 0; e < i; ++e) {
      std::uint32_t f = rows_[e][c];
      if (f != 0) {
        eliminate(rows_[e].data() + c, rows_[i].data() + c,
                  cols_ + aug_ - c, f);
      }
    }
  }
}

namespace {

RankResult finish_result(const RowEchelon& ech, std::size_t ncols,
                         std::size_t rows_seen, bool early_exit) {
  RankResult r;
  r.rank = ech.rank();
  r.pivot_columns = ech.pivot_columns();
  r.nullity = ncols - r.rank;
  r.early_exit = early_exit;
  r.rows_seen = rows_seen;
  return r;
}

}  // namespace

RankResult rank_streaming(RowSource& rows, std::size_t ncols,
                          const PrimeField& field) {
  if (rows.cols() != ncols) {
    throw std::invalid_argument("row source width does not match ncols");
  }
  RowEchelon ech(field, ncols);
  std::vector<std::uint32_t> row;
  std::size_t seen = 0;
  bool early = false;
  while (ech.rank() < ncols && rows.next(row)) {
    if (row.size() != ncols) {
      throw std::invalid_argument("row length mismatch");
    }
    ++seen;
    ech.absorb(row);
  }
  if (ech.rank() == ncols) early = true;
  return finish_result(ech, ncols, seen, early);
}

RankResult rank(const DenseMatrix& m) {
  MatrixRowSource src(m);
  return rank_streaming(src, m.cols(), m.field());
}

RankResult span_rank(const std::vector<std::vector<std::uint32_t>>& rows,
                     std::size_t cols, const PrimeField& field) {
  RowEchelon ech(field, cols);
  std::vector<std::uint32_t> row;
  for (const auto& r : rows) {
    row = r;
    ech.absorb(row);
  }
  RankResult res;
  res.rank = ech.rank();
  res.pivot_columns = ech.pivot_columns();
  res.nullity = cols - res.rank;
  res.rows_seen = rows.size();
  return res;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const DenseMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  const PrimeField& field = m.field();
  RowEchelon ech(field, nc, nr);
  std::vector<std::vector<std::uint32_t>> kernel;
  std::vector<std::uint32_t> row(nc + nr);
  for (std::size_t i = 0; i < nr; ++i) {
    row.assign(nc + nr, 0);
    std::copy(m.row_ptr(i), m.row_ptr(i) + nc, row.begin());
    row[nc + i] = 1;
    if (!ech.absorb(row)) {
      kernel.emplace_back(row.begin() + nc, row.end());
    }
  }
  // Canonicalize: the reduced echelon basis of the collected span.
  RowEchelon canon(field, nr);
  for (auto& v : kernel) {
    std::vector<std::uint32_t> tmp = v;
    canon.absorb(tmp);
  }
  canon.back_substitute();
  return canon.pivot_rows();
}

Echelon reduced_row_echelon(const DenseMatrix& m) {
  RowEchelon ech(m.field(), m.cols());
  std::vector<std::uint32_t> row;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    row = m.row_copy(i);
    ech.absorb(row);
  }
  ech.back_substitute();
  Echelon out;
  out.rows = ech.pivot_rows();
  out.pivot_cols = ech.pivot_columns();
  return out;
}

void reduce_against(const Echelon& ech, std::vector<std::uint32_t>& row,
                    const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    std::size_t c = ech.pivot_cols[i];
    std::uint64_t f = row[c];
    if (f == 0) continue;
    const auto& piv = ech.rows[i];
    for (std::size_t j = c; j < row.size(); ++j) {
      row[j] = field.reduce64(row[j] + f * (p - piv[j]));
    }
  }
}

}  // namespace lefschetz
