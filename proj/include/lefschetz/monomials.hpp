#pragma once

#include <cstddef>
#include <vector>

namespace lefschetz {

/// Exponent vector of a monomial; length = number of variables.
using Monomial = std::vector<int>;

/// Number of degree-d monomials in v variables: C(d+v-1, v-1).
/// Throws std::domain_error for d < 0 or v < 1, std::overflow_error when the
/// count exceeds the range of long long.
long long monomial_count(int vars, int degree);

/// Exact binomial coefficient with overflow detection.
long long binomial(int n, int k);

/// The degree-d monomials in v variables in descending lexicographic order on
/// exponent vectors, with the index bijection both ways. The order is a
/// contract: coefficient vectors in reports and on the wire use it.
class MonomialBasis {
public:
  MonomialBasis(int vars, int degree);

  int vars() const { return v_; }
  int degree() const { return d_; }
  std::size_t size() const { return monomials_.size(); }

  const Monomial& monomial_at(std::size_t index) const;
  std::size_t index_of(const Monomial& m) const;

  const std::vector<Monomial>& monomials() const { return monomials_; }

private:
  int v_, d_;
  std::vector<Monomial> monomials_;
};

/// Advances m to its successor in descending lex order; false at the end.
bool next_monomial(Monomial& m);

/// First monomial of the enumeration: (d, 0, ..., 0).
Monomial first_monomial(int vars, int degree);

/// Rank of m within the descending-lex enumeration of its degree.
std::size_t monomial_index(const Monomial& m);

}  // namespace lefschetz
