#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "exec.hpp"
#include "factored.hpp"
#include "rat.hpp"

namespace sumprod {

// Deduplicated set of exact rationals in ascending canonical order, with
// optional per-element factorizations (aligned with values). Product-type
// operations propagate factorizations; additive ones drop them.
class FiniteSet {
public:
  FiniteSet() = default;
  // Deduplicates; factorizations, when given, must align with `values` and
  // are carried through the same dedup/sort.
  explicit FiniteSet(std::vector<Rat> values);
  FiniteSet(std::vector<Rat> values, std::vector<FactoredRational> factorizations);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](std::size_t i) const { return values_[i]; }

  bool contains(const Rat& v) const;
  bool contains_zero() const { return contains(Rat(0)); }

  bool has_factorizations() const { return factors_.has_value(); }
  const FactoredRational& factorization(std::size_t i) const;
  // Attaches factorizations by trial division (bound-limited); throws
  // Errc::unfactored_residue when an element is not smooth enough.
  FiniteSet with_factorizations(std::uint64_t bound = 1'000'000) const;

  std::size_t max_omega() const;  // requires factorizations

  bool operator==(const FiniteSet& o) const { return values_ == o.values_; }

private:
  std::vector<Rat> values_;
  std::optional<std::vector<FactoredRational>> factors_;
};

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});
FiniteSet difference_set(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});
FiniteSet dilate(const Rat& c, const FiniteSet& a);
// 0 must not occur in either factor set (Errc::zero_element otherwise).
FiniteSet product_set(const FiniteSet& a, const FiniteSet& b, const Exec& ex = {});
FiniteSet iterated_sumset(const FiniteSet& a, std::size_t m, const Exec& ex = {});
FiniteSet iterated_product(const FiniteSet& a, std::size_t m, const Exec& ex = {});
FiniteSet a_plus_aa(const FiniteSet& a, const Exec& ex = {});

}  // namespace sumprod
