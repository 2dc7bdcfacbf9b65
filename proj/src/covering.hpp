#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exec.hpp"
#include "factored.hpp"
#include "finite_set.hpp"
#include "rat.hpp"

namespace sumprod {

enum class Relation { le, ge, eq };

// One verified inequality: lhs REL rhs over exact rationals.
struct Check {
  std::string name;
  Rat lhs;
  Relation relation = Relation::le;
  Rat rhs;
  bool holds = false;

  static Check make(std::string name, Rat lhs, Relation rel, Rat rhs);
};

const char* relation_symbol(Relation r);
bool all_hold(const std::vector<Check>& checks);

// One multiplicative class: rep * parts[i] enumerates the members, with rep
// free of the selected primes and every part supported on them.
struct CosetClass {
  Rat rep;
  FactoredRational rep_factored;
  std::vector<Rat> parts;  // ascending
};

struct CoveringCertificate {
  int variant = 0;
  unsigned k = 0;
  unsigned l = 0;
  std::vector<std::uint64_t> s_primes;  // ascending
  FiniteSet a_prime;                    // the surviving subset A'
  FiniteSet class_reps;                 // C
  std::vector<CosetClass> classes;      // classes of the decomposed set
  Rat threshold;                        // L
  bool degenerate_threshold = false;    // L <= 1, so every class survives
  std::size_t base_size = 0;            // |A| as fed to the pipeline
  std::size_t surviving_size = 0;       // |A0| for variant 2, |A| for variant 1
  std::size_t cover_size = 0;           // M = |C|
  std::vector<Check> checks;

  bool all_hold() const { return sumprod::all_hold(checks); }
};

struct PrimeSelection {
  PrimeSet s;
  std::vector<Check> checks;
};

struct GreedySelection {
  PrimeSet s;
  FiniteSet surviving;  // A0
  std::vector<Check> checks;
};

// Popular primes of A: primes dividing at least |A|/(2l) elements. Verifies
// |S| <= 2kl and that pairs sharing primes only inside S carry at least half
// of |A||B|. Throws Errc::hypothesis_violated when an omega bound fails.
PrimeSelection popular_primes(const FiniteSet& a, const FiniteSet& b, unsigned k, unsigned l,
                              const Exec& ex = {});

// Greedy chain: repeatedly adjoin a prime dividing at least a 1/(2l) share
// of the surviving subset and restrict to its multiples. Ties break by
// divisor count, then by smallest prime. Verifies |S| <= k,
// |A0| >= (2l)^{-|S|} |A| and the good-pair mass over A0 x B.
GreedySelection greedy_prime_chain(const FiniteSet& a, const FiniteSet& b, unsigned k, unsigned l,
                                   const Exec& ex = {});

// Partition of A into classes rep * parts with rep free of S-primes.
std::vector<CosetClass> split_by_s_free_part(const FiniteSet& a, const PrimeSet& s);

// The decomposition step: keeps classes of size at least
// L = |A||B| / (2^{k+l+2} |AB|) and certifies the cover bounds.
CoveringCertificate covering_decomposition(const FiniteSet& a, const FiniteSet& b,
                                           const PrimeSet& s, unsigned k, unsigned l,
                                           const Exec& ex = {});

// Full pipeline: prime selection (variant 1 = popular primes,
// variant 2 = greedy chain) composed with the decomposition.
CoveringCertificate cover_pipeline(const FiniteSet& a, const FiniteSet& b, unsigned k, unsigned l,
                                   int variant, const Exec& ex = {});

struct PigeonholeLevel {
  std::size_t level = 1;       // i
  FiniteSet b;                 // A^{(i)}
  Rat ratio;                   // |A A^{(i)}| / |A^{(i)}|, minimal over i
  std::vector<Rat> all_ratios; // per level 1..m-1
  Check guarantee;             // ratio^{m-1} |A| <= |A^{(m)}|
};

// Level selector: the i in [1, m) minimizing |A A^{(i)}| / |A^{(i)}|.
PigeonholeLevel pigeonhole_level(const FiniteSet& a, std::size_t m, const Exec& ex = {});

struct CoverWitness {
  bool covered = false;
  // For each element of A, the index into C of a witness rep (if any).
  std::vector<std::optional<std::size_t>> witness;
  std::optional<Rat> first_uncovered;
};

// Is every a in A of the form c * q with c in C and q supported on S?
CoverWitness m_covered_check(const FiniteSet& a, const PrimeSet& s, const FiniteSet& c);

}  // namespace sumprod
