#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exec.hpp"
#include "factored.hpp"
#include "finite_set.hpp"
#include "rat.hpp"

namespace sumprod {

// Finitely generated multiplicative subgroup of Q^x: free part given by
// multiplicatively independent generators (validated by exact row
// reduction of the exponent matrix), torsion {+-1} adjoined on request.
class GroupSpec {
public:
  GroupSpec(std::vector<FactoredRational> generators, bool include_torsion);

  std::size_t rank() const { return generators_.size(); }
  bool torsion() const { return torsion_; }
  const std::vector<FactoredRational>& generators() const { return generators_; }
  const std::vector<std::uint64_t>& support() const { return support_; }

  // Exponents e with |q| = prod |g_i|^{e_i}, if q lies in the subgroup of
  // values generated over the support primes (ignoring sign).
  std::optional<std::vector<std::int64_t>> solve_exponents(const Rat& q) const;

private:
  std::vector<FactoredRational> generators_;
  bool torsion_;
  std::vector<std::uint64_t> support_;     // sorted union of generator supports
  std::vector<std::vector<Rat>> exponent_columns_;  // [prime][generator]
};

// Finite window |e_i| <= H onto the infinite group.
struct ExponentBox {
  std::int64_t h = 1;
};

// a0 = a1 z1 + ... + am zm with all coefficients nonzero.
struct EquationInstance {
  Rat a0;
  std::vector<Rat> coeffs;

  EquationInstance(Rat a0_in, std::vector<Rat> coeffs_in);
  std::size_t arity() const { return coeffs.size(); }
};

// All +-prod g_i^{e_i} with |e_i| <= H, deduplicated. Throws when the slice
// size (2H+1)^r (times 2 for torsion) exceeds the enumeration budget.
FiniteSet enumerate_group(const GroupSpec& spec, const ExponentBox& box, const Exec& ex = {});

// Membership of q in the boxed slice, decided by factoring q over the
// generators' prime support and solving the exponent system; never
// enumerates the group.
bool boxed_member(const GroupSpec& spec, const ExponentBox& box, const Rat& q);

enum class CountMethod { automatic, meet_in_middle, naive };

struct SolutionCount {
  mpz_class nondegenerate = 0;
  mpz_class degenerate = 0;
  std::vector<std::vector<Rat>> solutions;  // nondegenerate tuples, up to the cap
  bool solutions_complete = true;
};

// Exact counts of solutions (z_1..z_m) over the boxed slice, split into
// nondegenerate (no nonempty subsum of the a_i z_i vanishes) and degenerate.
// m in {2,3} goes through the hash-keyed meet-in-the-middle route unless
// asked otherwise; naive full enumeration doubles as the cross-check.
SolutionCount count_nondegenerate_solutions(const EquationInstance& eq, const GroupSpec& spec,
                                            const ExponentBox& box, const Exec& ex = {},
                                            CountMethod method = CountMethod::automatic,
                                            std::size_t max_solutions = 1000);

struct ScanPoint {
  std::int64_t h = 0;
  mpz_class nondegenerate;
  mpz_class degenerate;
};

struct StabilizationScan {
  std::vector<ScanPoint> points;
  bool stabilized = false;        // last two scanned counts agree
  std::int64_t plateau_from = 0;  // smallest H whose count equals the final one
};

StabilizationScan stabilization_scan(const EquationInstance& eq, const GroupSpec& spec,
                                     const std::vector<std::int64_t>& h_list, const Exec& ex = {});

struct QuotientGraphSummary {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t max_out_degree = 0;
  Rat degree_stat;  // edges / |B|
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Directed graph on B with b1 -> b2 iff g1 b1 - g2 b2 = x has a solution in
// the boxed slice. Accelerated by per-(b1, g1) membership tests of
// (g1 b1 - x) / b2.
QuotientGraphSummary quotient_graph(const FiniteSet& b, const GroupSpec& spec,
                                    const ExponentBox& box, const Rat& x, const Exec& ex = {});

}  // namespace sumprod
