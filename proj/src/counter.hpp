#pragma once

#include <unordered_map>
#include <vector>

#include "exec.hpp"
#include "finite_set.hpp"
#include "rat.hpp"

namespace sumprod {

// Exact multiplicity function over rational keys. Multiplicities are
// arbitrary precision: iterated convolutions and cycle counts overflow
// 64 bits at desk scale already.
class Counter {
public:
  using Map = std::unordered_map<Rat, mpz_class, RatHash>;

  Counter() = default;
  explicit Counter(Map m) : m_(std::move(m)) {}

  const Map& map() const { return m_; }
  std::size_t support_size() const { return m_.size(); }

  mpz_class at(const Rat& key) const;
  mpz_class mass() const;                      // sum of all multiplicities
  mpz_class sum_of_squares() const;            // sum over keys of mult^2
  mpz_class moment(unsigned k, bool skip_zero_key) const;
  mpz_class max_multiplicity(bool skip_zero_key) const;

  void add(const Rat& key, const mpz_class& count);
  void merge(Counter&& other);

  // Entries in ascending key order (canonical emission order).
  std::vector<std::pair<Rat, mpz_class>> sorted_entries() const;

private:
  Map m_;
};

// Multiplicities of a+b over A x B: smash(A,B)(x) = #{(a,b) : a+b = x}.
Counter convolve(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});
// Multiplicities of a-b over A x B.
Counter co_convolve(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});
// m-fold self convolution of the indicator of A (multiplicities of
// a_1 + ... + a_m). Support is capped by ex.budgets.counter_entries.
Counter iterated_convolve(const FiniteSet& a, std::size_t m, const Exec& ex = {});

}  // namespace sumprod
