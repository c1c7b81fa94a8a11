#include "lefschetz/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefschetz {

namespace {

struct Factorials {
  std::vector<std::uint32_t> fact, inv_fact;
};

// n! and its inverse mod p for n <= kMaxExpansionDegree. Valid because the
// modulus exceeds 10^6 > kMaxExpansionDegree, so every factorial is a unit.
Factorials factorial_table(const PrimeField& field) {
  Factorials t;
  t.fact.resize(kMaxExpansionDegree + 1);
  t.inv_fact.resize(kMaxExpansionDegree + 1);
  t.fact[0] = 1;
  for (int i = 1; i <= kMaxExpansionDegree; ++i) {
    t.fact[i] = field.mul(t.fact[i - 1], static_cast<std::uint32_t>(i));
  }
  t.inv_fact[kMaxExpansionDegree] = field.inv(t.fact[kMaxExpansionDegree]);
  for (int i = kMaxExpansionDegree; i > 0; --i) {
    t.inv_fact[i - 1] = field.mul(t.inv_fact[i], static_cast<std::uint32_t>(i));
  }
  return t;
}

void check_vars(const DegreeSlice& a, const DegreeSlice& b) {
  if (a.vars != b.vars) {
    throw std::invalid_argument("variable count mismatch");
  }
}

}  // namespace

bool DegreeSlice::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](std::uint32_t c) { return c == 0; });
}

DegreeSlice expand_power(const LinearForm& ell, int k,
                         const PrimeField& field) {
  if (k < 1 || k > kMaxExpansionDegree) {
    throw std::domain_error("power out of supported range");
  }
  const int v = ell.vars();
  if (v < 1) throw std::domain_error("empty linear form");
  const Factorials tab = factorial_table(field);

  MonomialBasis basis(v, k);
  DegreeSlice out{v, k, std::vector<std::uint32_t>(basis.size(), 0)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& alpha = basis.monomial_at(i);
    std::uint32_t c = tab.fact[k];
    for (int j = 0; j < v; ++j) {
      c = field.mul(c, tab.inv_fact[alpha[j]]);
      c = field.mul(c, field.pow(ell.coefficients[j],
                                 static_cast<std::uint64_t>(alpha[j])));
    }
    out.coefficients[i] = c;
  }
  return out;
}

DegreeSlice multiply(const DegreeSlice& a, const DegreeSlice& b,
                     const PrimeField& field) {
  check_vars(a, b);
  const int v = a.vars;
  const int d = a.degree + b.degree;
  MonomialBasis ba(v, a.degree), bb(v, b.degree);
  DegreeSlice out{v, d,
                  std::vector<std::uint32_t>(
                      static_cast<std::size_t>(monomial_count(v, d)), 0)};
  Monomial sum(v);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coefficients[i] == 0) continue;
    const Monomial& ma = ba.monomial_at(i);
    for (std::size_t j = 0; j < bb.size(); ++j) {
      if (b.coefficients[j] == 0) continue;
      const Monomial& mb = bb.monomial_at(j);
      for (int t = 0; t < v; ++t) sum[t] = ma[t] + mb[t];
      std::size_t idx = monomial_index(sum);
      out.coefficients[idx] = field.add(
          out.coefficients[idx], field.mul(a.coefficients[i], b.coefficients[j]));
    }
  }
  return out;
}

DegreeSlice monomial_multiple(const DegreeSlice& a, const Monomial& m) {
  const int v = a.vars;
  if (static_cast<int>(m.size()) != v) {
    throw std::invalid_argument("variable count mismatch");
  }
  int md = 0;
  for (int e : m) md += e;
  const int d = a.degree + md;
  MonomialBasis ba(v, a.degree);
  DegreeSlice out{v, d,
                  std::vector<std::uint32_t>(
                      static_cast<std::size_t>(monomial_count(v, d)), 0)};
  Monomial sum(v);
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (a.coefficients[i] == 0) continue;
    const Monomial& ma = ba.monomial_at(i);
    for (int t = 0; t < v; ++t) sum[t] = ma[t] + m[t];
    out.coefficients[monomial_index(sum)] = a.coefficients[i];
  }
  return out;
}

DegreeSlice add(const DegreeSlice& a, const DegreeSlice& b,
                const PrimeField& field) {
  check_vars(a, b);
  if (a.degree != b.degree) throw std::invalid_argument("degree mismatch");
  DegreeSlice out = a;
  for (std::size_t i = 0; i < out.coefficients.size(); ++i) {
    out.coefficients[i] = field.add(out.coefficients[i], b.coefficients[i]);
  }
  return out;
}

DegreeSlice scale(const DegreeSlice& a, std::uint32_t c,
                  const PrimeField& field) {
  DegreeSlice out = a;
  for (auto& x : out.coefficients) x = field.mul(x, c);
  return out;
}

std::uint32_t derivative_row_entry(const Monomial& alpha, const Monomial& beta,
                                   const std::vector<std::uint32_t>& point,
                                   const PrimeField& field) {
  const int v = static_cast<int>(alpha.size());
  std::uint32_t r = 1;
  for (int i = 0; i < v; ++i) {
    if (beta[i] > alpha[i]) return 0;
    for (int t = 0; t < beta[i]; ++t) {
      r = field.mul(r, field.reduce_int(alpha[i] - t));
    }
    r = field.mul(r, field.pow(point[i],
                               static_cast<std::uint64_t>(alpha[i] - beta[i])));
  }
  return r;
}

std::uint32_t apply_derivative(const DegreeSlice& f, const Monomial& beta,
                               const std::vector<std::uint32_t>& point,
                               const PrimeField& field) {
  MonomialBasis basis(f.vars, f.degree);
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (f.coefficients[i] == 0) continue;
    std::uint32_t e = derivative_row_entry(basis.monomial_at(i), beta, point, field);
    acc = field.add(acc, field.mul(f.coefficients[i], e));
  }
  return acc;
}

std::uint32_t evaluate(const DegreeSlice& f,
                       const std::vector<std::uint32_t>& point,
                       const PrimeField& field) {
  Monomial zero(f.vars, 0);
  return apply_derivative(f, zero, point, field);
}

DegreeSlice slice_from_linear_form(const LinearForm& ell) {
  DegreeSlice s{ell.vars(), 1, ell.coefficients};
  return s;
}

}  // namespace lefschetz
