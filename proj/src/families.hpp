#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "factored.hpp"
#include "finite_set.hpp"

namespace sumprod {

// A = {p * M^j : 1 <= p <= M, 1 <= j <= N}, deduplicated, factored.
FiniteSet balog_wooley(std::uint64_t m, std::uint64_t n);

// {q, q^2, ..., q^n} for q not in {0, +1, -1}; omega stays at omega(q).
FiniteSet geometric(const FactoredRational& q, std::uint64_t n);

struct RandomFewPrimeParams {
  std::vector<std::uint64_t> pool;  // candidate primes
  unsigned k = 1;                   // max primes per element
  std::int64_t e_max = 1;           // exponent magnitude cap
  std::size_t size = 1;
  std::uint64_t seed = 0;
  bool integer_mode = false;        // positive elements, exponents in [1, e_max]
};

// Seeded sampler of +-products of at most k pool primes; elements are
// validated to satisfy omega <= k and never include 0. Deterministic for a
// fixed parameter set.
FiniteSet random_few_prime(const RandomFewPrimeParams& params);

struct FamilySpec {
  enum class Kind { balog_wooley, geometric, random_few_prime, explicit_set } kind;
  // balog_wooley
  std::uint64_t m = 0, n_levels = 0;
  // geometric
  Rat q;
  std::uint64_t n = 0;
  // random_few_prime
  RandomFewPrimeParams random;
  // explicit_set
  std::vector<Rat> elements;

  std::string label() const;
  std::uint64_t seed() const { return kind == Kind::random_few_prime ? random.seed : 0; }
};

FiniteSet generate(const FamilySpec& spec);

}  // namespace sumprod
