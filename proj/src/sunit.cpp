#include "sunit.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "errors.hpp"

namespace sumprod {

namespace {

// Row echelon rank of a rational matrix, in place.
std::size_t rank_of(std::vector<std::vector<Rat>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col].is_zero()) continue;
      Rat f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<FactoredRational> generators, bool include_torsion)
    : generators_(std::move(generators)), torsion_(include_torsion) {
  std::set<std::uint64_t> primes;
  for (const auto& g : generators_) {
    if (g.omega() == 0)
      fail(Errc::invalid_input,
           "generator +-1 contributes no free rank; use the torsion flag for -1");
    for (auto& [p, e] : g.factors()) primes.insert(p);
  }
  support_.assign(primes.begin(), primes.end());

  // Exponent matrix over the support; generators must be independent.
  std::vector<std::vector<Rat>> rows(generators_.size(),
                                     std::vector<Rat>(support_.size(), Rat(0)));
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = 0; j < support_.size(); ++j)
      rows[i][j] = Rat(static_cast<long>(generators_[i].valuation(support_[j])));
  if (rank_of(rows) != generators_.size())
    fail(Errc::invalid_input, "generators are multiplicatively dependent");

  exponent_columns_.assign(support_.size(), std::vector<Rat>(generators_.size(), Rat(0)));
  for (std::size_t j = 0; j < support_.size(); ++j)
    for (std::size_t i = 0; i < generators_.size(); ++i)
      exponent_columns_[j][i] = Rat(static_cast<long>(generators_[i].valuation(support_[j])));
}

std::optional<std::vector<std::int64_t>> GroupSpec::solve_exponents(const Rat& q) const {
  if (q.is_zero()) return std::nullopt;
  // Valuations of q at the support primes; any leftover factor kills it.
  mpz_class num = abs(q.num());
  mpz_class den = q.den();
  std::vector<std::int64_t> target(support_.size(), 0);
  for (std::size_t j = 0; j < support_.size(); ++j) {
    unsigned long p = static_cast<unsigned long>(support_[j]);
    while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
      mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
      ++target[j];
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
      mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
      --target[j];
    }
  }
  if (num != 1 || den != 1) return std::nullopt;

  // Solve sum_i e_i * v_p(g_i) = v_p(q) over all support primes.
  const std::size_t r = generators_.size();
  std::vector<std::vector<Rat>> aug(support_.size(), std::vector<Rat>(r + 1, Rat(0)));
  for (std::size_t j = 0; j < support_.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) aug[j][i] = exponent_columns_[j][i];
    aug[j][r] = Rat(static_cast<long>(target[j]));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < aug.size(); ++col) {
    std::size_t p = row;
    while (p < aug.size() && aug[p][col].is_zero()) ++p;
    if (p == aug.size()) continue;
    std::swap(aug[row], aug[p]);
    for (std::size_t rr = 0; rr < aug.size(); ++rr) {
      if (rr == row || aug[rr][col].is_zero()) continue;
      Rat f = aug[rr][col] / aug[row][col];
      for (std::size_t c = col; c <= r; ++c) aug[rr][c] -= f * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  // Consistency: zero rows must have zero targets. Independence makes the
  // solution unique when it exists.
  for (std::size_t j = row; j < aug.size(); ++j)
    if (!aug[j][r].is_zero()) return std::nullopt;
  if (pivot_col.size() != r) return std::nullopt;  // defensive; rank checked at build

  std::vector<std::int64_t> e(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    Rat v = aug[i][r] / aug[i][pivot_col[i]];
    if (!v.is_integer()) return std::nullopt;
    if (!v.num().fits_slong_p()) return std::nullopt;
    e[pivot_col[i]] = v.num().get_si();
  }
  return e;
}

EquationInstance::EquationInstance(Rat a0_in, std::vector<Rat> coeffs_in)
    : a0(std::move(a0_in)), coeffs(std::move(coeffs_in)) {
  if (a0.is_zero()) fail(Errc::zero_element, "equation constant a0 must be nonzero");
  if (coeffs.empty()) fail(Errc::parameter, "equation needs at least one coefficient");
  for (const Rat& c : coeffs)
    if (c.is_zero()) fail(Errc::zero_element, "equation coefficients must be nonzero");
}

namespace {

double box_size_estimate(const GroupSpec& spec, const ExponentBox& box) {
  double total = spec.torsion() ? 2.0 : 1.0;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    total *= static_cast<double>(2 * box.h + 1);
  return total;
}

void require_box(const GroupSpec& spec, const ExponentBox& box, const Exec& ex) {
  if (box.h < 1) fail(Errc::parameter, "exponent box needs H >= 1");
  if (box_size_estimate(spec, box) > static_cast<double>(ex.budgets.enumeration))
    fail(Errc::enumeration_budget, "boxed group slice exceeds the enumeration budget");
}

}  // namespace

FiniteSet enumerate_group(const GroupSpec& spec, const ExponentBox& box, const Exec& ex) {
  require_box(spec, box, ex);
  std::vector<Rat> values;
  std::vector<std::int64_t> e(spec.rank(), -box.h);
  while (true) {
    Rat v(1);
    for (std::size_t i = 0; i < spec.rank(); ++i)
      v *= spec.generators()[i].value().pow(e[i]);
    values.push_back(v);
    if (spec.torsion()) values.push_back(-v);
    std::size_t i = 0;
    while (i < spec.rank() && e[i] == box.h) {
      e[i] = -box.h;
      ++i;
    }
    if (i == spec.rank()) break;
    ++e[i];
  }
  return FiniteSet(std::move(values));
}

bool boxed_member(const GroupSpec& spec, const ExponentBox& box, const Rat& q) {
  if (q.is_zero()) return false;
  auto e = spec.solve_exponents(q);
  if (!e) return false;
  for (std::int64_t v : *e)
    if (v < -box.h || v > box.h) return false;
  int sign = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i)
    if (spec.generators()[i].sign() == -1 && ((*e)[i] % 2 != 0)) sign = -sign;
  if (sign == q.sign()) return true;
  return spec.torsion();
}

namespace {

// True iff some nonempty subsum of the terms vanishes. The full sum equals
// a0 != 0, so proper and improper subsets test the same thing.
bool has_vanishing_subsum(const std::vector<Rat>& terms) {
  const std::size_t n = terms.size();
  const std::size_t limit = std::size_t{1} << n;
  std::vector<Rat> partial(limit);
  for (std::size_t mask = 1; mask < limit - 1; ++mask) {
    std::size_t low = mask & (~mask + 1);
    std::size_t idx = static_cast<std::size_t>(__builtin_ctzll(mask));
    partial[mask] = partial[mask ^ low] + terms[idx];
    if (partial[mask].is_zero()) return true;
  }
  return false;
}

void classify(const EquationInstance& eq, const std::vector<Rat>& tuple, SolutionCount& out,
              std::size_t max_solutions) {
  std::vector<Rat> terms(eq.arity());
  for (std::size_t i = 0; i < eq.arity(); ++i) terms[i] = eq.coeffs[i] * tuple[i];
  if (has_vanishing_subsum(terms)) {
    ++out.degenerate;
  } else {
    ++out.nondegenerate;
    if (out.solutions.size() < max_solutions) {
      out.solutions.push_back(tuple);
    } else {
      out.solutions_complete = false;
    }
  }
}

SolutionCount count_by_left_enumeration(const EquationInstance& eq, const FiniteSet& slice,
                                        const Exec& ex, std::size_t max_solutions) {
  const std::size_t m = eq.arity();
  double work = 1;
  for (std::size_t i = 0; i + 1 < m; ++i) work *= static_cast<double>(slice.size());
  if (work > static_cast<double>(ex.budgets.brute_force))
    fail(Errc::brute_force_budget, "meet-in-the-middle half exceeds the brute-force budget");

  std::unordered_set<Rat, RatHash> member(slice.values().begin(), slice.values().end());
  SolutionCount out;
  std::vector<Rat> tuple(m);
  const Rat& last_coeff = eq.coeffs[m - 1];
  auto descend = [&](auto&& self, std::size_t depth, const Rat& acc) -> void {
    if (depth + 1 == m) {
      Rat z = acc / last_coeff;
      if (member.count(z)) {
        tuple[m - 1] = z;
        classify(eq, tuple, out, max_solutions);
      }
      return;
    }
    for (const Rat& z : slice.values()) {
      tuple[depth] = z;
      self(self, depth + 1, acc - eq.coeffs[depth] * z);
    }
  };
  descend(descend, 0, eq.a0);
  return out;
}

SolutionCount count_naive(const EquationInstance& eq, const FiniteSet& slice, const Exec& ex,
                          std::size_t max_solutions) {
  const std::size_t m = eq.arity();
  double work = 1;
  for (std::size_t i = 0; i < m; ++i) work *= static_cast<double>(slice.size());
  if (work > static_cast<double>(ex.budgets.brute_force))
    fail(Errc::brute_force_budget, "naive enumeration exceeds the brute-force budget");

  SolutionCount out;
  std::vector<Rat> tuple(m);
  auto descend = [&](auto&& self, std::size_t depth, const Rat& acc) -> void {
    if (depth == m) {
      if (acc == eq.a0) classify(eq, tuple, out, max_solutions);
      return;
    }
    for (const Rat& z : slice.values()) {
      tuple[depth] = z;
      self(self, depth + 1, acc + eq.coeffs[depth] * z);
    }
  };
  descend(descend, 0, Rat(0));
  return out;
}

}  // namespace

SolutionCount count_nondegenerate_solutions(const EquationInstance& eq, const GroupSpec& spec,
                                            const ExponentBox& box, const Exec& ex,
                                            CountMethod method, std::size_t max_solutions) {
  FiniteSet slice = enumerate_group(spec, box, ex);
  if (method == CountMethod::automatic)
    method = eq.arity() <= 3 ? CountMethod::meet_in_middle : CountMethod::naive;
  if (method == CountMethod::meet_in_middle)
    return count_by_left_enumeration(eq, slice, ex, max_solutions);
  return count_naive(eq, slice, ex, max_solutions);
}

StabilizationScan stabilization_scan(const EquationInstance& eq, const GroupSpec& spec,
                                     const std::vector<std::int64_t>& h_list, const Exec& ex) {
  if (h_list.empty()) fail(Errc::parameter, "scan needs at least one H");
  StabilizationScan out;
  for (std::int64_t h : h_list) {
    SolutionCount c = count_nondegenerate_solutions(eq, spec, ExponentBox{h}, ex,
                                                    CountMethod::automatic, 0);
    out.points.push_back(ScanPoint{h, c.nondegenerate, c.degenerate});
  }
  const mpz_class& final_count = out.points.back().nondegenerate;
  out.plateau_from = out.points.back().h;
  for (auto it = out.points.rbegin(); it != out.points.rend(); ++it) {
    if (it->nondegenerate != final_count) break;
    out.plateau_from = it->h;
  }
  out.stabilized = out.points.size() >= 2 &&
                   out.points[out.points.size() - 2].nondegenerate == final_count;
  return out;
}

QuotientGraphSummary quotient_graph(const FiniteSet& b, const GroupSpec& spec,
                                    const ExponentBox& box, const Rat& x, const Exec& ex) {
  if (x.is_zero()) fail(Errc::zero_element, "quotient graph needs x != 0");
  if (b.contains_zero()) fail(Errc::zero_element, "quotient graph needs 0-free B");
  FiniteSet slice = enumerate_group(spec, box, ex);
  double probes = static_cast<double>(b.size()) * static_cast<double>(b.size()) *
                  static_cast<double>(slice.size());
  if (probes > static_cast<double>(ex.budgets.pair_ops))
    fail(Errc::enumeration_budget, "quotient graph probe count exceeds the pair budget");

  QuotientGraphSummary out;
  out.vertex_count = b.size();
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t degree = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      bool edge = false;
      for (const Rat& g1 : slice.values()) {
        Rat candidate = (g1 * b[i] - x) / b[j];
        if (boxed_member(spec, box, candidate)) {
          edge = true;
          break;
        }
      }
      if (edge) {
        out.edges.emplace_back(i, j);
        ++degree;
      }
    }
    out.max_out_degree = std::max(out.max_out_degree, degree);
  }
  out.edge_count = out.edges.size();
  out.degree_stat = Rat(static_cast<long>(out.edge_count)) / Rat(static_cast<long>(b.size()));
  return out;
}

}  // namespace sumprod
