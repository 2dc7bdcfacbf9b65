#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "rat.hpp"

namespace sumprod {

// Deterministic 64-bit primality (Miller-Rabin with a proven witness set).
bool is_prime_u64(std::uint64_t n);

// A validated prime, usable as a strongly typed key.
struct Prime {
  std::uint64_t value;
  explicit Prime(std::uint64_t v);
  auto operator<=>(const Prime&) const = default;
};

using PrimeSet = std::set<std::uint64_t>;

// Nonzero rational stored as sign * prod p^{e_p}, exponents nonzero.
// Product-type arithmetic is exact map merging; additive arithmetic lives
// on Rat instead (sums of smooth numbers need not be smooth).
class FactoredRational {
public:
  FactoredRational() : sign_(1) {}  // the unit 1
  FactoredRational(int sign, std::map<std::uint64_t, std::int64_t> factors);

  int sign() const { return sign_; }
  const std::map<std::uint64_t, std::int64_t>& factors() const { return factors_; }

  // omega: number of distinct primes with nonzero exponent.
  std::size_t omega() const { return factors_.size(); }
  // p-adic valuation (0 if p absent).
  std::int64_t valuation(std::uint64_t p) const;
  // Support P(x) as an ordered prime set.
  PrimeSet support() const;
  // True iff P(x) is contained in S (membership in Q_S).
  bool supported_on(const PrimeSet& s) const;

  // Unique split x = outside * inside with P(outside) disjoint from S and
  // inside in Q_S; the sign travels with the outside part.
  struct Split;
  Split split_support(const PrimeSet& s) const;

  Rat value() const;

  FactoredRational times(const FactoredRational& o) const;
  FactoredRational divided_by(const FactoredRational& o) const { return times(o.inverse()); }
  FactoredRational inverse() const;
  FactoredRational pow(std::int64_t e) const;

  bool operator==(const FactoredRational& o) const = default;

private:
  struct Unchecked {};
  FactoredRational(Unchecked, int sign, std::map<std::uint64_t, std::int64_t> factors)
      : sign_(sign), factors_(std::move(factors)) {}

  friend FactoredRational factor(const mpz_class&, std::uint64_t);
  friend FactoredRational factor(const Rat&, std::uint64_t);

  int sign_;
  std::map<std::uint64_t, std::int64_t> factors_;
};

struct FactoredRational::Split {
  FactoredRational outside;
  FactoredRational inside;
};

// Ascending primes up to a bound, via a byte sieve. Factorization helpers
// assume inputs whose prime factors all lie at or below `bound`.
class PrimePool {
public:
  explicit PrimePool(std::uint64_t bound = 1'000'000);

  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> primes_;
};

// Trial division over primes <= bound. Throws Errc::unfactored_residue if a
// cofactor above the bound survives. Denominator primes get negative
// exponents; the sign of the input lands in sign().
FactoredRational factor(const mpz_class& n, std::uint64_t bound = 1'000'000);
FactoredRational factor(const Rat& q, std::uint64_t bound = 1'000'000);

}  // namespace sumprod
