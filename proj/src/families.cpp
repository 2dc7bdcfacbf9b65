#include "families.hpp"

#include <unordered_set>

#include "errors.hpp"
#include "rng.hpp"

namespace sumprod {

FiniteSet balog_wooley(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 1) fail(Errc::parameter, "balog_wooley needs M >= 2, N >= 1");
  FactoredRational base = factor(mpz_class(static_cast<unsigned long>(m)));
  std::vector<Rat> values;
  std::vector<FactoredRational> factors;
  values.reserve(m * n);
  factors.reserve(m * n);
  for (std::uint64_t p = 1; p <= m; ++p) {
    FactoredRational fp = factor(mpz_class(static_cast<unsigned long>(p)));
    for (std::uint64_t j = 1; j <= n; ++j) {
      FactoredRational f = fp.times(base.pow(static_cast<std::int64_t>(j)));
      values.push_back(f.value());
      factors.push_back(std::move(f));
    }
  }
  return FiniteSet(std::move(values), std::move(factors));
}

FiniteSet geometric(const FactoredRational& q, std::uint64_t n) {
  Rat qv = q.value();
  if (qv.is_zero() || qv == Rat(1) || qv == Rat(-1))
    fail(Errc::parameter, "geometric ratio must differ from 0 and +-1");
  if (n < 1) fail(Errc::parameter, "geometric needs n >= 1");
  std::vector<Rat> values;
  std::vector<FactoredRational> factors;
  values.reserve(n);
  factors.reserve(n);
  FactoredRational acc = q;
  for (std::uint64_t j = 1; j <= n; ++j) {
    values.push_back(acc.value());
    factors.push_back(acc);
    acc = acc.times(q);
  }
  return FiniteSet(std::move(values), std::move(factors));
}

FiniteSet random_few_prime(const RandomFewPrimeParams& params) {
  if (params.pool.empty()) fail(Errc::parameter, "random_few_prime needs a nonempty pool");
  if (params.k < 1 || params.k > params.pool.size())
    fail(Errc::parameter, "random_few_prime needs 1 <= k <= |pool|");
  if (params.e_max < 1) fail(Errc::parameter, "random_few_prime needs e_max >= 1");
  if (params.size < 1) fail(Errc::parameter, "random_few_prime needs size >= 1");
  for (std::uint64_t p : params.pool)
    if (!is_prime_u64(p)) fail(Errc::invalid_input, "pool entry is not prime: " + std::to_string(p));

  Rng rng(params.seed);
  std::unordered_set<Rat, RatHash> seen;
  std::vector<Rat> values;
  std::vector<FactoredRational> factors;
  const std::uint64_t max_attempts =
      std::max<std::uint64_t>(1'000'000, 1'000 * static_cast<std::uint64_t>(params.size));
  std::uint64_t attempts = 0;
  while (values.size() < params.size) {
    if (++attempts > max_attempts)
      fail(Errc::exhausted_sampler,
           "sampler cannot reach " + std::to_string(params.size) + " distinct elements");
    unsigned t = static_cast<unsigned>(rng.range(1, static_cast<std::int64_t>(params.k)));
    std::vector<std::size_t> chosen = rng.sample_indices(params.pool.size(), t);
    std::map<std::uint64_t, std::int64_t> fmap;
    for (std::size_t idx : chosen) {
      std::int64_t e;
      if (params.integer_mode) {
        e = rng.range(1, params.e_max);
      } else {
        e = rng.range(1, params.e_max);
        if (rng.coin()) e = -e;
      }
      fmap[params.pool[idx]] = e;
    }
    int sign = params.integer_mode ? 1 : (rng.coin() ? 1 : -1);
    FactoredRational f(sign, std::move(fmap));
    if (f.omega() > params.k) fail(Errc::invalid_input, "sampler produced omega above k");
    Rat v = f.value();
    if (seen.insert(v).second) {
      values.push_back(std::move(v));
      factors.push_back(std::move(f));
    }
  }
  return FiniteSet(std::move(values), std::move(factors));
}

std::string FamilySpec::label() const {
  switch (kind) {
    case Kind::balog_wooley:
      return "balog_wooley(M=" + std::to_string(m) + ";N=" + std::to_string(n_levels) + ")";
    case Kind::geometric:
      return "geometric(q=" + q.str() + ";n=" + std::to_string(n) + ")";
    case Kind::random_few_prime: {
      std::string pool;
      for (std::size_t i = 0; i < random.pool.size(); ++i)
        pool += (i ? "." : "") + std::to_string(random.pool[i]);
      return "random_few_prime(pool=" + pool + ";k=" + std::to_string(random.k) +
             ";e=" + std::to_string(random.e_max) + ";size=" + std::to_string(random.size) +
             ";seed=" + std::to_string(random.seed) + (random.integer_mode ? ";int" : "") + ")";
    }
    case Kind::explicit_set:
      return "explicit(size=" + std::to_string(elements.size()) + ")";
  }
  return "unknown";
}

FiniteSet generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::balog_wooley:
      return balog_wooley(spec.m, spec.n_levels);
    case FamilySpec::Kind::geometric:
      return geometric(factor(spec.q), spec.n);
    case FamilySpec::Kind::random_few_prime:
      return random_few_prime(spec.random);
    case FamilySpec::Kind::explicit_set:
      return FiniteSet(spec.elements);
  }
  fail(Errc::invalid_input, "unknown family kind");
}

}  // namespace sumprod
