#include "counter.hpp"

#include <algorithm>

#include "errors.hpp"
#include "parallel.hpp"

namespace sumprod {

mpz_class Counter::at(const Rat& key) const {
  auto it = m_.find(key);
  return it == m_.end() ? mpz_class(0) : it->second;
}

mpz_class Counter::mass() const {
  mpz_class total = 0;
  for (auto& [k, c] : m_) total += c;
  return total;
}

mpz_class Counter::sum_of_squares() const {
  mpz_class total = 0;
  for (auto& [k, c] : m_) total += c * c;
  return total;
}

mpz_class Counter::moment(unsigned k, bool skip_zero_key) const {
  mpz_class total = 0;
  for (auto& [key, c] : m_) {
    if (skip_zero_key && key.is_zero()) continue;
    total += pow_mpz(c, k);
  }
  return total;
}

mpz_class Counter::max_multiplicity(bool skip_zero_key) const {
  mpz_class best = 0;
  for (auto& [key, c] : m_) {
    if (skip_zero_key && key.is_zero()) continue;
    if (c > best) best = c;
  }
  return best;
}

void Counter::add(const Rat& key, const mpz_class& count) {
  if (sgn(count) == 0) return;
  auto [it, fresh] = m_.emplace(key, count);
  if (!fresh) {
    it->second += count;
    if (it->second == 0) m_.erase(it);
  }
}

void Counter::merge(Counter&& other) {
  if (m_.size() < other.m_.size()) std::swap(m_, other.m_);
  for (auto& [k, c] : other.m_) add(k, c);
}

std::vector<std::pair<Rat, mpz_class>> Counter::sorted_entries() const {
  std::vector<std::pair<Rat, mpz_class>> out(m_.begin(), m_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

namespace {

template <class F>
Counter pairwise_counts(const FiniteSet& a, const FiniteSet& b, const Exec& ex, F f) {
  auto locals = sharded<Counter::Map>(
      a.size(), ex.threads, [&](std::size_t, std::size_t lo, std::size_t hi, Counter::Map& out) {
        for (std::size_t i = lo; i < hi; ++i)
          for (const Rat& y : b.values()) {
            auto [it, fresh] = out.emplace(f(a[i], y), 1);
            if (!fresh) ++it->second;
          }
      });
  Counter merged(std::move(locals[0]));
  for (std::size_t s = 1; s < locals.size(); ++s) merged.merge(Counter(std::move(locals[s])));
  return merged;
}

}  // namespace

Counter convolve(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  return pairwise_counts(a, b, ex, [](const Rat& x, const Rat& y) { return x + y; });
}

Counter co_convolve(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  return pairwise_counts(a, b, ex, [](const Rat& x, const Rat& y) { return x - y; });
}

Counter iterated_convolve(const FiniteSet& a, std::size_t m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "iterated convolution needs m >= 1");
  Counter::Map acc;
  acc.reserve(a.size());
  for (const Rat& v : a.values()) acc.emplace(v, 1);
  for (std::size_t step = 1; step < m; ++step) {
    Counter::Map next;
    next.reserve(acc.size());
    for (auto& [key, count] : acc) {
      for (const Rat& v : a.values()) {
        auto [it, fresh] = next.emplace(key + v, count);
        if (!fresh) it->second += count;
        if (next.size() > ex.budgets.counter_entries)
          fail(Errc::memory_budget,
               "convolution support exceeds counter budget of " +
                   std::to_string(ex.budgets.counter_entries) + " entries; reduce m or |A|");
      }
    }
    acc = std::move(next);
  }
  return Counter(std::move(acc));
}

}  // namespace sumprod
