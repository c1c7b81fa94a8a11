#include "lefschetz/artinian.hpp"

#include <algorithm>
#include <stdexcept>

#include "lefschetz/rng.hpp"

namespace lefschetz {

int PowerIdealSpec::uniform_power() const {
  if (generators.empty()) throw std::invalid_argument("empty generator list");
  int k = generators.front().second;
  for (const auto& g : generators) {
    if (g.second != k) {
      throw std::invalid_argument("generator powers are mixed");
    }
  }
  return k;
}

PowerIdealSpec random_power_ideal(int vars, int count, int power,
                                  std::uint64_t seed, const PrimeField& field) {
  if (vars < 1 || count < 1 || power < 1) {
    throw std::domain_error("bad power ideal parameters");
  }
  std::mt19937_64 rng(seed);
  PowerIdealSpec spec{vars, {}, seed, field};
  spec.generators.reserve(count);
  for (int i = 0; i < count; ++i) {
    spec.generators.emplace_back(random_linear_form(rng, vars, field), power);
  }
  return spec;
}

PowerIdealSpec with_extra_generator(const PowerIdealSpec& spec,
                                    const LinearForm& ell, int power) {
  PowerIdealSpec out = spec;
  out.generators.emplace_back(ell, power);
  return out;
}

SpecWithForm eight_cubes_instance(std::uint64_t seed, const PrimeField& field) {
  std::mt19937_64 rng(seed);
  PowerIdealSpec spec{7, {}, seed, field};
  for (int i = 0; i < 8; ++i) {
    spec.generators.emplace_back(random_linear_form(rng, 7, field), 3);
  }
  LinearForm ell = random_linear_form(rng, 7, field);
  return SpecWithForm{std::move(spec), std::move(ell)};
}

IdealSliceRows::IdealSliceRows(const PowerIdealSpec& spec, int degree)
    : vars_(spec.vars), degree_(degree) {
  if (degree < 0) throw std::domain_error("negative degree");
  cols_ = static_cast<std::size_t>(monomial_count(vars_, degree));
  for (const auto& [form, k] : spec.generators) {
    if (k < 1) throw std::domain_error("generator power must be >= 1");
    if (k > degree) continue;
    GenState g;
    g.power = expand_power(form, k, spec.field);
    MonomialBasis pb(vars_, k);
    for (std::size_t i = 0; i < pb.size(); ++i) {
      if (g.power.coefficients[i] != 0) {
        g.support.push_back(i);
        g.support_mono.push_back(pb.monomial_at(i));
      }
    }
    g.coeff_degree = degree - k;
    total_rows_ += static_cast<std::size_t>(
        monomial_count(vars_, g.coeff_degree));
    gens_.push_back(std::move(g));
  }
  start_generator();
}

void IdealSliceRows::start_generator() {
  current_valid_ = false;
  while (gen_idx_ < gens_.size()) {
    current_ = first_monomial(vars_, gens_[gen_idx_].coeff_degree);
    current_valid_ = true;
    return;
  }
}

bool IdealSliceRows::next(std::vector<std::uint32_t>& row) {
  if (!current_valid_) return false;
  const GenState& g = gens_[gen_idx_];
  row.assign(cols_, 0);
  Monomial sum(vars_);
  for (std::size_t s = 0; s < g.support.size(); ++s) {
    const Monomial& gamma = g.support_mono[s];
    for (int t = 0; t < vars_; ++t) sum[t] = current_[t] + gamma[t];
    row[monomial_index(sum)] = g.power.coefficients[g.support[s]];
  }
  if (!next_monomial(current_)) {
    ++gen_idx_;
    start_generator();
  }
  return true;
}

namespace {

// Echelon state of the degree-d ideal slice, built by streaming.
RowEchelon slice_echelon(const PowerIdealSpec& spec, int d) {
  IdealSliceRows rows(spec, d);
  RowEchelon ech(spec.field, rows.cols());
  std::vector<std::uint32_t> row;
  while (ech.rank() < rows.cols() && rows.next(row)) {
    ech.absorb(row);
  }
  return ech;
}

// Continues a degree-d echelon with the rows m * ell over all monomials m of
// degree d-1; equivalent to appending (ell, 1) to the generator list.
void absorb_form_rows(RowEchelon& ech, const LinearForm& ell, int d) {
  const int v = ell.vars();
  if (d < 1) return;
  std::vector<std::uint32_t> row;
  Monomial m = first_monomial(v, d - 1);
  Monomial sum(v);
  bool more = true;
  while (more && ech.rank() < ech.cols()) {
    row.assign(ech.cols(), 0);
    for (int t = 0; t < v; ++t) {
      if (ell.coefficients[t] == 0) continue;
      for (int u = 0; u < v; ++u) sum[u] = m[u] + (u == t ? 1 : 0);
      row[monomial_index(sum)] = ell.coefficients[t];
    }
    ech.absorb(row);
    more = next_monomial(m);
  }
}

}  // namespace

long long hilbert_dimension(const PowerIdealSpec& spec, int d) {
  if (d < 0) throw std::domain_error("negative degree");
  IdealSliceRows rows(spec, d);
  RankResult r = rank_streaming(rows, rows.cols(), spec.field);
  return static_cast<long long>(rows.cols()) -
         static_cast<long long>(r.rank);
}

long long HilbertFunction::at(int d) const {
  if (d < 0) throw std::out_of_range("negative degree");
  if (static_cast<std::size_t>(d) < dims.size()) return dims[d];
  if (vanished) return 0;
  throw std::out_of_range("degree beyond computed cap");
}

int HilbertFunction::socle_degree() const {
  for (int d = static_cast<int>(dims.size()); d-- > 0;) {
    if (dims[d] > 0) return d;
  }
  return -1;
}

HilbertFunction hilbert_function(const PowerIdealSpec& spec, int cap) {
  if (cap < 0) throw std::domain_error("negative cap");
  HilbertFunction hf;
  hf.cap = cap;
  for (int d = 0; d <= cap; ++d) {
    long long dim = hilbert_dimension(spec, d);
    hf.dims.push_back(dim);
    if (dim == 0) {
      hf.vanished = true;
      break;
    }
  }
  if (!hf.dims.empty() && hf.dims[0] != 1) {
    throw std::logic_error("dim A_0 != 1");
  }
  return hf;
}

DenseMatrix syzygy_matrix(const PowerIdealSpec& spec, int t) {
  const int k = spec.uniform_power();
  IdealSliceRows rows(spec, t + k);
  DenseMatrix m(rows.total_rows(), rows.cols(), spec.field);
  std::vector<std::uint32_t> row;
  std::size_t i = 0;
  while (rows.next(row)) {
    std::copy(row.begin(), row.end(), m.row_ptr(i));
    ++i;
  }
  return m;
}

SyzygyCount syzygy_dimension(const PowerIdealSpec& spec, int t) {
  if (t < 0) throw std::domain_error("negative coefficient degree");
  const int k = spec.uniform_power();
  const int s = static_cast<int>(spec.generators.size());
  IdealSliceRows rows(spec, t + k);
  const long long total = static_cast<long long>(rows.total_rows());
  RankResult r = rank_streaming(rows, rows.cols(), spec.field);
  SyzygyCount out;
  out.coefficient_degree = t;
  out.dimension = total - static_cast<long long>(r.rank);
  out.koszul_lower_bound =
      t >= k ? binomial(s, 2) * monomial_count(spec.vars, t - k) : 0;
  if (out.dimension < 0) throw std::logic_error("negative syzygy dimension");
  return out;
}

std::vector<std::vector<std::uint32_t>> koszul_basis(
    const PowerIdealSpec& spec, int t, bool* below_power) {
  const int k = spec.uniform_power();
  if (below_power) *below_power = false;
  if (t < k) {
    if (below_power) *below_power = true;
    return {};
  }
  const PrimeField& field = spec.field;
  const int v = spec.vars;
  const int s = static_cast<int>(spec.generators.size());
  const std::size_t block =
      static_cast<std::size_t>(monomial_count(v, t));

  std::vector<DegreeSlice> powers;
  powers.reserve(s);
  for (const auto& [form, kk] : spec.generators) {
    powers.push_back(expand_power(form, kk, field));
  }

  std::vector<std::vector<std::uint32_t>> vectors;
  MonomialBasis coeff_basis(v, t - k);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      for (std::size_t mi = 0; mi < coeff_basis.size(); ++mi) {
        const Monomial& m = coeff_basis.monomial_at(mi);
        DegreeSlice fi = monomial_multiple(powers[j], m);
        DegreeSlice fj = scale(monomial_multiple(powers[i], m),
                               field.neg(1), field);
        std::vector<std::uint32_t> vec(block * s, 0);
        std::copy(fi.coefficients.begin(), fi.coefficients.end(),
                  vec.begin() + block * i);
        std::copy(fj.coefficients.begin(), fj.coefficients.end(),
                  vec.begin() + block * j);
        // Kernel membership: f_i L_i^k + f_j L_j^k must vanish identically.
        DegreeSlice check =
            add(multiply(fi, powers[i], field), multiply(fj, powers[j], field),
                field);
        if (!check.is_zero()) {
          throw std::logic_error("koszul vector not in the kernel");
        }
        vectors.push_back(std::move(vec));
      }
    }
  }
  RankResult r = span_rank(vectors, block * s, field);
  if (r.rank != vectors.size()) {
    throw std::runtime_error("koszul vectors are not independent");
  }
  return vectors;
}

namespace {

DenseMatrix materialize_slice(const PowerIdealSpec& spec, int d) {
  IdealSliceRows rows(spec, d);
  DenseMatrix m(rows.total_rows(), rows.cols(), spec.field);
  std::vector<std::uint32_t> row;
  std::size_t i = 0;
  while (rows.next(row)) {
    std::copy(row.begin(), row.end(), m.row_ptr(i));
    ++i;
  }
  return m;
}

std::vector<std::size_t> standard_monomials(const Echelon& ech,
                                            std::size_t ncols) {
  std::vector<std::size_t> out;
  std::size_t pi = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (pi < ech.pivot_cols.size() && ech.pivot_cols[pi] == c) {
      ++pi;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

void check_step_identities(const LefschetzStep& st) {
  if (st.rank != st.dim_source - st.kernel_dim ||
      st.rank != st.dim_target - st.coker_dim || st.rank < 0 ||
      st.kernel_dim < 0 || st.coker_dim < 0) {
    throw std::logic_error("rank/nullity identities violated in step");
  }
}

LefschetzStep step_from_counts(int d, long long source, long long target,
                               long long coker) {
  LefschetzStep st;
  st.degree = d;
  st.dim_source = source;
  st.dim_target = target;
  st.coker_dim = coker;
  st.kernel_dim = source - target + coker;
  st.rank = source - st.kernel_dim;
  st.maximal_rank = st.rank == std::min(source, target);
  check_step_identities(st);
  return st;
}

}  // namespace

LefschetzStep lefschetz_step_direct(const PowerIdealSpec& spec,
                                    const LinearForm& ell, int d) {
  const PrimeField& field = spec.field;
  const int v = spec.vars;
  Echelon ed = reduced_row_echelon(materialize_slice(spec, d));
  Echelon ed1 = reduced_row_echelon(materialize_slice(spec, d + 1));
  MonomialBasis bd(v, d);
  std::vector<std::size_t> sd = standard_monomials(ed, bd.size());
  std::vector<std::size_t> sd1 =
      standard_monomials(ed1, static_cast<std::size_t>(monomial_count(v, d + 1)));

  // Matrix of x ell on the quotient bases.
  std::vector<std::vector<std::uint32_t>> map_rows;
  map_rows.reserve(sd.size());
  DegreeSlice ell_slice = slice_from_linear_form(ell);
  for (std::size_t idx : sd) {
    DegreeSlice prod =
        monomial_multiple(ell_slice, bd.monomial_at(idx));
    std::vector<std::uint32_t> full = prod.coefficients;
    reduce_against(ed1, full, field);
    std::vector<std::uint32_t> coords;
    coords.reserve(sd1.size());
    for (std::size_t c : sd1) coords.push_back(full[c]);
    map_rows.push_back(std::move(coords));
  }
  RankResult r = span_rank(map_rows, sd1.size(), field);

  LefschetzStep st;
  st.degree = d;
  st.dim_source = static_cast<long long>(sd.size());
  st.dim_target = static_cast<long long>(sd1.size());
  st.rank = static_cast<long long>(r.rank);
  st.kernel_dim = st.dim_source - st.rank;
  st.coker_dim = st.dim_target - st.rank;
  st.maximal_rank = st.rank == std::min(st.dim_source, st.dim_target);
  check_step_identities(st);
  return st;
}

namespace {

LefschetzStep step_with_cross_check(const PowerIdealSpec& spec,
                                    const LinearForm& ell, int d,
                                    long long source, long long target,
                                    long long coker) {
  LefschetzStep st = step_from_counts(d, source, target, coker);
  if (d <= 4) {
    LefschetzStep direct = lefschetz_step_direct(spec, ell, d);
    if (direct.dim_source != st.dim_source ||
        direct.dim_target != st.dim_target || direct.rank != st.rank ||
        direct.kernel_dim != st.kernel_dim ||
        direct.coker_dim != st.coker_dim) {
      throw std::runtime_error(
          "multiplication-step cross-check failed at degree " +
          std::to_string(d));
    }
  }
  return st;
}

}  // namespace

LefschetzStep lefschetz_step(const PowerIdealSpec& spec, const LinearForm& ell,
                             int d) {
  if (d < 0) throw std::domain_error("negative degree");
  long long source = hilbert_dimension(spec, d);
  RowEchelon ech = slice_echelon(spec, d + 1);
  long long target = static_cast<long long>(ech.cols()) -
                     static_cast<long long>(ech.rank());
  long long coker = 0;
  if (target > 0) {
    absorb_form_rows(ech, ell, d + 1);
    coker = static_cast<long long>(ech.cols()) -
            static_cast<long long>(ech.rank());
  }
  return step_with_cross_check(spec, ell, d, source, target, coker);
}

WlpProfile wlp_profile(const PowerIdealSpec& spec, const LinearForm& ell,
                       int cap) {
  if (cap < 0) throw std::domain_error("negative cap");
  WlpProfile out;
  out.hilbert.cap = cap + 1;

  // One echelon per degree serves both the dimension and, continued with the
  // rows of the extra form, the cokernel of the step into that degree.
  std::vector<long long> dims{1};
  std::vector<long long> cokers{0};  // coker of the step into degree e
  bool vanished = false;
  for (int e = 1; e <= cap + 1 && !vanished; ++e) {
    RowEchelon ech = slice_echelon(spec, e);
    long long dim = static_cast<long long>(ech.cols()) -
                    static_cast<long long>(ech.rank());
    dims.push_back(dim);
    if (dim > 0) {
      absorb_form_rows(ech, ell, e);
      cokers.push_back(static_cast<long long>(ech.cols()) -
                       static_cast<long long>(ech.rank()));
    } else {
      cokers.push_back(0);
      vanished = true;
    }
  }
  out.hilbert.vanished = vanished;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out.hilbert.dims.push_back(dims[i]);
    if (dims[i] == 0) break;
  }

  auto dim_at = [&](int d) -> long long {
    if (static_cast<std::size_t>(d) < dims.size()) return dims[d];
    if (vanished) return 0;
    throw std::out_of_range("profile cap does not cover nonzero degrees");
  };
  auto coker_at = [&](int d) -> long long {
    if (static_cast<std::size_t>(d) < cokers.size()) return cokers[d];
    return 0;
  };

  for (int d = 0; d <= cap; ++d) {
    LefschetzStep st = step_with_cross_check(spec, ell, d, dim_at(d),
                                             dim_at(d + 1), coker_at(d + 1));
    if (!st.maximal_rank) out.failing_degrees.push_back(d);
    out.steps.push_back(st);
  }
  return out;
}

}  // namespace lefschetz
