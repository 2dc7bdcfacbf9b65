#include "finite_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "errors.hpp"
#include "parallel.hpp"

namespace sumprod {

FiniteSet::FiniteSet(std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  values_ = std::move(values);
}

FiniteSet::FiniteSet(std::vector<Rat> values, std::vector<FactoredRational> factorizations) {
  if (values.size() != factorizations.size())
    fail(Errc::invalid_input, "factorization list does not align with values");
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<Rat> vs;
  std::vector<FactoredRational> fs;
  vs.reserve(values.size());
  fs.reserve(values.size());
  for (std::size_t i : order) {
    if (!vs.empty() && vs.back() == values[i]) continue;
    vs.push_back(std::move(values[i]));
    fs.push_back(std::move(factorizations[i]));
  }
  values_ = std::move(vs);
  factors_ = std::move(fs);
}

bool FiniteSet::contains(const Rat& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

const FactoredRational& FiniteSet::factorization(std::size_t i) const {
  if (!factors_) fail(Errc::invalid_input, "set carries no factorizations");
  return (*factors_)[i];
}

FiniteSet FiniteSet::with_factorizations(std::uint64_t bound) const {
  if (factors_) return *this;
  std::vector<FactoredRational> fs;
  fs.reserve(values_.size());
  for (const Rat& v : values_) fs.push_back(factor(v, bound));
  FiniteSet out;
  out.values_ = values_;
  out.factors_ = std::move(fs);
  return out;
}

std::size_t FiniteSet::max_omega() const {
  if (!factors_) fail(Errc::invalid_input, "set carries no factorizations");
  std::size_t w = 0;
  for (const auto& f : *factors_) w = std::max(w, f.omega());
  return w;
}

namespace {

using RatSet = std::unordered_set<Rat, RatHash>;

// Pairwise expansion of f(a, b) over A x B, sharded over A, merged into one
// deduplicated set. The merge is a plain union, so the result does not
// depend on the shard count.
template <class F>
FiniteSet pairwise(const FiniteSet& a, const FiniteSet& b, const Exec& ex, F f) {
  auto locals = sharded<RatSet>(a.size(), ex.threads, [&](std::size_t, std::size_t lo,
                                                          std::size_t hi, RatSet& out) {
    out.reserve((hi - lo) * b.size());
    for (std::size_t i = lo; i < hi; ++i)
      for (const Rat& y : b.values()) out.insert(f(a[i], y));
  });
  RatSet merged = std::move(locals[0]);
  for (std::size_t s = 1; s < locals.size(); ++s)
    merged.insert(locals[s].begin(), locals[s].end());
  std::vector<Rat> vs(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
  return FiniteSet(std::move(vs));
}

void require_zero_free(const FiniteSet& s, const char* op) {
  if (s.contains_zero()) fail(Errc::zero_element, std::string(op) + " requires 0-free sets");
}

}  // namespace

FiniteSet sumset(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  return pairwise(a, b, ex, [](const Rat& x, const Rat& y) { return x + y; });
}

FiniteSet difference_set(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  return pairwise(a, b, ex, [](const Rat& x, const Rat& y) { return x - y; });
}

FiniteSet dilate(const Rat& c, const FiniteSet& a) {
  if (c.is_zero()) fail(Errc::zero_element, "dilation by zero");
  std::vector<Rat> vs;
  vs.reserve(a.size());
  for (const Rat& v : a.values()) vs.push_back(c * v);
  return FiniteSet(std::move(vs));
}

namespace {

// Product set; factorizations merge when both operands carry them.
FiniteSet product_impl(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  require_zero_free(a, "product set");
  require_zero_free(b, "product set");
  if (a.has_factorizations() && b.has_factorizations()) {
    using Local = std::unordered_map<Rat, FactoredRational, RatHash>;
    auto locals = sharded<Local>(a.size(), ex.threads, [&](std::size_t, std::size_t lo,
                                                           std::size_t hi, Local& out) {
      for (std::size_t i = lo; i < hi; ++i) {
        const FactoredRational& fa = a.factorization(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
          Rat v = a[i] * b[j];
          if (out.find(v) == out.end()) out.emplace(std::move(v), fa.times(b.factorization(j)));
        }
      }
    });
    Local merged = std::move(locals[0]);
    for (std::size_t s = 1; s < locals.size(); ++s)
      merged.insert(locals[s].begin(), locals[s].end());
    std::vector<Rat> vs;
    std::vector<FactoredRational> fs;
    vs.reserve(merged.size());
    fs.reserve(merged.size());
    for (auto& [v, f] : merged) {
      vs.push_back(v);
      fs.push_back(std::move(f));
    }
    return FiniteSet(std::move(vs), std::move(fs));
  }
  return pairwise(a, b, ex, [](const Rat& x, const Rat& y) { return x * y; });
}

}  // namespace

FiniteSet product_set(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  return product_impl(a, b, ex);
}

FiniteSet iterated_sumset(const FiniteSet& a, std::size_t m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "iterated sumset needs m >= 1");
  FiniteSet acc = a;
  for (std::size_t i = 1; i < m; ++i) acc = sumset(acc, a, ex);
  return acc;
}

FiniteSet iterated_product(const FiniteSet& a, std::size_t m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "iterated product needs m >= 1");
  require_zero_free(a, "iterated product");
  FiniteSet acc = a;
  for (std::size_t i = 1; i < m; ++i) acc = product_impl(acc, a, ex);
  return acc;
}

FiniteSet a_plus_aa(const FiniteSet& a, const Exec& ex) {
  require_zero_free(a, "A+AA");
  return sumset(a, product_impl(a, a, ex), ex);
}

}  // namespace sumprod
