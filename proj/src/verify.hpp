#pragma once

#include <map>
#include <string>
#include <vector>

#include "counter.hpp"
#include "covering.hpp"
#include "energy.hpp"
#include "exec.hpp"
#include "finite_set.hpp"

namespace sumprod {

// A verified (or report-only) inequality with exact sides. Fractional
// exponents are cleared first, so every comparison is an exact rational
// one; natural logs of the recorded sides are kept for display only.
struct CheckReport {
  std::string name;
  Rat lhs;
  Relation relation = Relation::le;
  Rat rhs;
  bool holds = false;
  bool report_only = false;  // recorded, never a pass/fail criterion
  double lhs_log = 0;
  double rhs_log = 0;
  std::map<std::string, std::string> context;
};

CheckReport make_report(std::string name, Rat lhs, Relation rel, Rat rhs,
                        std::map<std::string, std::string> context = {});

bool all_hold(const std::vector<CheckReport>& reports);

// |mA| * E_{2m}(A) >= |A|^{2m}, both sides exact.
CheckReport check_holder_energy(const FiniteSet& a, unsigned m, const Exec& ex = {});

// Signed representation count against the interpolated energies:
// count^{2k-2r} <= E_{2r}^{2k-n} * E_{2k}^{n-2r}  (n = |signs|).
CheckReport check_energy_interpolation(const FiniteSet& a, const Rat& x,
                                       const std::vector<int>& signs, unsigned r, unsigned k,
                                       const Exec& ex = {});

struct PopularSet {
  enum class Mode { sums, differences } mode = Mode::sums;
  FiniteSet c;     // values whose convolution multiplicity clears |A|/(2K)
  Rat k_ratio;     // K = |A+A|/|A| or |A-A|/|A|
  mpz_class mass;  // total multiplicity mass carried by C
};

struct PopularSetResult {
  PopularSet set;
  std::vector<CheckReport> checks;  // mass, size, and energy-domination facts
};

PopularSetResult popular_set(const FiniteSet& a, PopularSet::Mode mode, const Exec& ex = {});

// The two exact steps of the cycle-count argument on (A, B, C): the
// Sidorenko lower bound for even-cycle homomorphisms and the
// Cauchy-Schwarz upper bound, plus the combined form as a report-only row.
std::vector<CheckReport> check_shkredov_steps(const FiniteSet& a, const FiniteSet& b,
                                              const FiniteSet& c, unsigned k, const Exec& ex = {});

// E(A,B)^{m(n-1)} <= E_{2m}(A)^{n-1} * E_{2n}(B) * |B|^{m(n-1)-n}.
CheckReport check_asymmetric_energy(const FiniteSet& a, const FiniteSet& b, unsigned m, unsigned n,
                                    const Exec& ex = {});

// |A+B| * E(A,B) >= |A|^2 |B|^2.
CheckReport check_cauchy_schwarz_sumset(const FiniteSet& a, const FiniteSet& b,
                                        const Exec& ex = {});

// Exact growth statistics of one set; log-ratio columns are derived at
// serialization time.
struct StatsRow {
  std::size_t n = 0;
  std::uint64_t sumset = 0;
  std::uint64_t diffset = 0;
  std::uint64_t prodset = 0;
  std::uint64_t a_plus_aa_size = 0;
  mpz_class e4;  // additive energy E(A)
  std::vector<std::pair<unsigned, std::uint64_t>> iterated_sums;   // (m, |mA|)
  std::vector<std::pair<unsigned, std::uint64_t>> iterated_prods;  // (m, |A^{(m)}|)
};

StatsRow report_exponents(const FiniteSet& a, const std::vector<unsigned>& ms,
                          const Exec& ex = {});

struct SuiteConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 20;
  std::size_t max_size = 12;
};

// Named randomized suites: holder, interpolation, popular, shkredov,
// asymmetric, cauchy_schwarz, or all.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& config,
                                   const Exec& ex = {});

// The set-applicable checks for one supplied set (used by file-driven runs).
std::vector<CheckReport> checks_for_set(const FiniteSet& a, const Exec& ex = {});

}  // namespace sumprod
