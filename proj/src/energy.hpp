#pragma once

#include <cstdint>
#include <vector>

#include "counter.hpp"
#include "exec.hpp"
#include "finite_set.hpp"

namespace sumprod {

struct EnergyReport {
  unsigned m = 0;           // E_{2m}; m = 2 for the plain additive energy
  mpz_class value;
  enum class Method { convolution, brute_force } method = Method::convolution;
};

// E(A,B): quadruples with a1 - a2 = b1 - b2, via the difference convolution.
EnergyReport additive_energy(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});

// E_{2m}(A) from the m-fold convolution counter (memory ~ |mA|). The
// 2m-tuple brute force lives in the test oracles only.
EnergyReport higher_energy(const FiniteSet& a, unsigned m, const Exec& ex = {});

// E*_{2m}(A): 2m-tuples summing to zero (m plus, m minus) in which no
// nonempty proper signed subsum vanishes. Brute force over |A|^{2m} tuples.
EnergyReport nondegenerate_energy(const FiniteSet& a, unsigned m, const Exec& ex = {});

// #{ (a_1..a_n) in A^n : sum_i signs[i] * a_i = x }, meet-in-the-middle
// over the two halves of the sign pattern.
mpz_class signed_representation_count(const FiniteSet& a, const Rat& x,
                                      const std::vector<int>& signs, const Exec& ex = {});

// sum over x != 0 of (1_A o 1_A)(x)^k, and the corresponding max.
mpz_class moment_sum(const FiniteSet& a, unsigned k, const Exec& ex = {});
mpz_class max_nonzero_coconv(const FiniteSet& a, const Exec& ex = {});

// Closed-walk count V_{2k} of the bipartite graph on A x B with edges
// a ~ b iff a + b lies in C: trace of (N N^T)^k over exact integers.
mpz_class cycle_homomorphism_count(const FiniteSet& a, const FiniteSet& b, const FiniteSet& c,
                                   unsigned k, const Exec& ex = {});

}  // namespace sumprod
