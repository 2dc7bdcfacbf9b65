#include "energy.hpp"

#include <algorithm>

#include "errors.hpp"
#include "parallel.hpp"

namespace sumprod {

EnergyReport additive_energy(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  Counter diffs = co_convolve(a, b, ex);
  return EnergyReport{2, diffs.sum_of_squares(), EnergyReport::Method::convolution};
}

EnergyReport higher_energy(const FiniteSet& a, unsigned m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "higher energy needs m >= 1");
  Counter reps = iterated_convolve(a, m, ex);
  return EnergyReport{m, reps.sum_of_squares(), EnergyReport::Method::convolution};
}

namespace {

double pow_estimate(std::size_t base, unsigned e) {
  double v = 1;
  for (unsigned i = 0; i < e; ++i) v *= static_cast<double>(base);
  return v;
}

void require_tuple_budget(std::size_t base, unsigned e, const Exec& ex) {
  if (pow_estimate(base, e) > static_cast<double>(ex.budgets.brute_force))
    fail(Errc::brute_force_budget,
         "brute-force enumeration of " + std::to_string(base) + "^" + std::to_string(e) +
             " tuples exceeds the configured budget");
}

}  // namespace

EnergyReport nondegenerate_energy(const FiniteSet& a, unsigned m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "nondegenerate energy needs m >= 1");
  if (a.contains_zero()) fail(Errc::zero_element, "nondegenerate energy requires 0-free A");
  const unsigned n = 2 * m;
  require_tuple_budget(a.size(), n, ex);
  if (a.empty()) return EnergyReport{m, 0, EnergyReport::Method::brute_force};

  // Depth-first over tuples, carrying the running signed sum; at a full
  // tuple with sum zero, scan all proper nonempty signed subsums.
  std::vector<Rat> signed_vals(n);
  std::vector<Rat> subsum(std::size_t{1} << n);
  mpz_class count = 0;
  auto descend = [&](auto&& self, std::size_t depth, const Rat& sum) -> void {
    if (depth == n) {
      if (!sum.is_zero()) return;
      const std::size_t full = (std::size_t{1} << n) - 1;
      for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = mask & (~mask + 1);
        std::size_t lowidx = static_cast<std::size_t>(__builtin_ctzll(mask));
        subsum[mask] = subsum[mask ^ low] + signed_vals[lowidx];
        if (subsum[mask].is_zero()) return;
      }
      ++count;
      return;
    }
    for (const Rat& v : a.values()) {
      signed_vals[depth] = depth < m ? v : -v;
      self(self, depth + 1, sum + signed_vals[depth]);
    }
  };
  descend(descend, 0, Rat(0));
  return EnergyReport{m, count, EnergyReport::Method::brute_force};
}

mpz_class signed_representation_count(const FiniteSet& a, const Rat& x,
                                      const std::vector<int>& signs, const Exec& ex) {
  if (signs.empty()) fail(Errc::parameter, "sign pattern must be nonempty");
  for (int s : signs)
    if (s != 1 && s != -1) fail(Errc::parameter, "signs must be +-1");
  if (a.empty()) return 0;
  const std::size_t n = signs.size();
  const std::size_t half = n / 2;
  require_tuple_budget(a.size(), static_cast<unsigned>(n - half), ex);

  // Partial sums over the first half, keyed by value.
  auto half_sums = [&](std::size_t lo, std::size_t hi) {
    Counter::Map sums;
    std::vector<std::size_t> pick(hi - lo, 0);
    if (lo == hi) {
      sums.emplace(Rat(0), 1);
      return sums;
    }
    while (true) {
      Rat s(0);
      for (std::size_t i = lo; i < hi; ++i) {
        const Rat& v = a[pick[i - lo]];
        s += signs[i] == 1 ? v : -v;
      }
      auto [it, fresh] = sums.emplace(std::move(s), 1);
      if (!fresh) ++it->second;
      std::size_t i = hi - lo;
      while (i > 0 && pick[i - 1] + 1 == a.size()) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < hi - lo; ++j) pick[j] = 0;
    }
    return sums;
  };

  Counter::Map left = half_sums(0, half);
  Counter::Map right = half_sums(half, n);
  mpz_class count = 0;
  for (auto& [s2, c2] : right) {
    auto it = left.find(x - s2);
    if (it != left.end()) count += it->second * c2;
  }
  return count;
}

mpz_class moment_sum(const FiniteSet& a, unsigned k, const Exec& ex) {
  if (k < 1) fail(Errc::parameter, "moment order must be >= 1");
  return co_convolve(a, a, ex).moment(k, /*skip_zero_key=*/true);
}

mpz_class max_nonzero_coconv(const FiniteSet& a, const Exec& ex) {
  return co_convolve(a, a, ex).max_multiplicity(/*skip_zero_key=*/true);
}

namespace {

// Dense row-major exact integer matrix, square.
struct Matrix {
  std::size_t n = 0;
  std::vector<mpz_class> cells;
  explicit Matrix(std::size_t dim) : n(dim), cells(dim * dim) {}
  mpz_class& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

Matrix multiply(const Matrix& x, const Matrix& y, unsigned threads) {
  Matrix out(x.n);
  sharded<int>(x.n, threads, [&](std::size_t, std::size_t lo, std::size_t hi, int&) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t l = 0; l < x.n; ++l) {
        const mpz_class& xv = x.at(i, l);
        if (sgn(xv) == 0) continue;
        for (std::size_t j = 0; j < x.n; ++j) {
          const mpz_class& yv = y.at(l, j);
          if (sgn(yv) != 0)
            mpz_addmul(out.at(i, j).get_mpz_t(), xv.get_mpz_t(), yv.get_mpz_t());
        }
      }
  });
  return out;
}

}  // namespace

mpz_class cycle_homomorphism_count(const FiniteSet& a, const FiniteSet& b, const FiniteSet& c,
                                   unsigned k, const Exec& ex) {
  if (k < 1) fail(Errc::parameter, "cycle length parameter k must be >= 1");
  if (a.empty() || b.empty()) return 0;
  if (a.size() > ex.budgets.matrix_dim || b.size() > ex.budgets.matrix_dim)
    fail(Errc::memory_budget, "cycle-count matrix dimension exceeds the configured cap");

  // Biadjacency over A x B, then M = N N^T restricted to the A side.
  std::vector<std::uint8_t> n_ab(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (c.contains(a[i] + b[j])) n_ab[i * b.size() + j] = 1;

  Matrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      unsigned long common = 0;
      for (std::size_t l = 0; l < b.size(); ++l)
        common += static_cast<unsigned long>(n_ab[i * b.size() + l] & n_ab[j * b.size() + l]);
      m.at(i, j) = common;
    }

  Matrix power = m;
  for (unsigned step = 1; step < k; ++step) power = multiply(power, m, ex.threads);
  mpz_class trace = 0;
  for (std::size_t i = 0; i < a.size(); ++i) trace += power.at(i, i);
  return trace;
}

}  // namespace sumprod
