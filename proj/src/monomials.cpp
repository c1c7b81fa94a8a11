#include "lefschetz/monomials.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace lefschetz {

namespace {

constexpr int kPascalN = 168;
constexpr int kPascalK = 24;
constexpr long long kOverflow = -1;

// Pascal triangle for n <= kPascalN, min(k, n-k) <= kPascalK; -1 marks
// entries beyond the range of long long.
struct PascalTable {
  long long c[kPascalN + 1][kPascalK + 1];
  PascalTable() {
    const long long cap = std::numeric_limits<long long>::max();
    for (int n = 0; n <= kPascalN; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= kPascalK; ++k) {
        if (k > n) {
          c[n][k] = 0;
          continue;
        }
        if (k == n) {
          c[n][k] = 1;
          continue;
        }
        long long a = c[n - 1][k - 1];
        long long b = c[n - 1][k];
        c[n][k] = (a == kOverflow || b == kOverflow || a > cap - b)
                      ? kOverflow
                      : a + b;
      }
    }
  }
};

long long binomial_slow(int n, int k) {
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(
                std::numeric_limits<long long>::max())) {
      throw std::overflow_error("binomial coefficient overflow");
    }
  }
  return static_cast<long long>(r);
}

}  // namespace

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  if (n <= kPascalN && k <= kPascalK) {
    static const PascalTable table;
    long long v = table.c[n][k];
    if (v == kOverflow) throw std::overflow_error("binomial coefficient overflow");
    return v;
  }
  return binomial_slow(n, k);
}

long long monomial_count(int vars, int degree) {
  if (vars < 1) throw std::domain_error("variable count must be positive");
  if (degree < 0) throw std::domain_error("degree must be nonnegative");
  return binomial(degree + vars - 1, vars - 1);
}

Monomial first_monomial(int vars, int degree) {
  Monomial m(vars, 0);
  m[0] = degree;
  return m;
}

bool next_monomial(Monomial& m) {
  const int v = static_cast<int>(m.size());
  int j = -1;
  for (int i = v - 2; i >= 0; --i) {
    if (m[i] > 0) {
      j = i;
      break;
    }
  }
  if (j < 0) return false;  // all weight on the last variable: enumeration done
  int tail = 0;
  for (int i = j + 1; i < v; ++i) tail += m[i];
  m[j] -= 1;
  for (int i = j + 1; i < v; ++i) m[i] = 0;
  m[j + 1] = tail + 1;
  return true;
}

std::size_t monomial_index(const Monomial& m) {
  const int v = static_cast<int>(m.size());
  int rem = std::accumulate(m.begin(), m.end(), 0);
  std::size_t idx = 0;
  for (int pos = 0; pos < v - 1; ++pos) {
    // Monomials with a larger exponent at this position come first.
    for (int e = rem; e > m[pos]; --e) {
      idx += static_cast<std::size_t>(monomial_count(v - pos - 1, rem - e));
    }
    rem -= m[pos];
  }
  return idx;
}

MonomialBasis::MonomialBasis(int vars, int degree) : v_(vars), d_(degree) {
  long long n = monomial_count(vars, degree);
  monomials_.reserve(static_cast<std::size_t>(n));
  Monomial m = first_monomial(vars, degree);
  do {
    monomials_.push_back(m);
  } while (next_monomial(m));
  if (monomials_.size() != static_cast<std::size_t>(n)) {
    throw std::logic_error("monomial enumeration length mismatch");
  }
}

const Monomial& MonomialBasis::monomial_at(std::size_t index) const {
  if (index >= monomials_.size()) {
    throw std::out_of_range("monomial index out of range");
  }
  return monomials_[index];
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  if (static_cast<int>(m.size()) != v_) {
    throw std::invalid_argument("monomial has wrong variable count");
  }
  return monomial_index(m);
}

}  // namespace lefschetz
