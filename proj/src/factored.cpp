#include "factored.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sumprod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t v) : value(v) {
  if (!is_prime_u64(v)) fail(Errc::invalid_input, "not a prime: " + std::to_string(v));
}

FactoredRational::FactoredRational(int sign, std::map<std::uint64_t, std::int64_t> factors)
    : sign_(sign), factors_(std::move(factors)) {
  if (sign_ != 1 && sign_ != -1) fail(Errc::invalid_input, "sign must be +1 or -1");
  for (auto& [p, e] : factors_) {
    if (e == 0) fail(Errc::invalid_input, "zero exponent stored for prime " + std::to_string(p));
    if (!is_prime_u64(p)) fail(Errc::invalid_input, "factor key is not prime: " + std::to_string(p));
  }
}

std::int64_t FactoredRational::valuation(std::uint64_t p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

PrimeSet FactoredRational::support() const {
  PrimeSet s;
  for (auto& [p, e] : factors_) s.insert(p);
  return s;
}

bool FactoredRational::supported_on(const PrimeSet& s) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const auto& pe) { return s.count(pe.first) != 0; });
}

FactoredRational::Split FactoredRational::split_support(const PrimeSet& s) const {
  std::map<std::uint64_t, std::int64_t> out, in;
  for (auto& [p, e] : factors_) (s.count(p) ? in : out)[p] = e;
  return {FactoredRational(Unchecked{}, sign_, std::move(out)),
          FactoredRational(Unchecked{}, 1, std::move(in))};
}

Rat FactoredRational::value() const {
  mpz_class num(sign_), den(1);
  for (auto& [p, e] : factors_) {
    mpz_class pe = pow_mpz(mpz_class(static_cast<unsigned long>(p)),
                           static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0) {
      num *= pe;
    } else {
      den *= pe;
    }
  }
  return Rat(num, den);
}

FactoredRational FactoredRational::times(const FactoredRational& o) const {
  std::map<std::uint64_t, std::int64_t> merged = factors_;
  for (auto& [p, e] : o.factors_) {
    auto [it, fresh] = merged.emplace(p, e);
    if (!fresh) {
      it->second += e;
      if (it->second == 0) merged.erase(it);
    }
  }
  return FactoredRational(Unchecked{}, sign_ * o.sign_, std::move(merged));
}

FactoredRational FactoredRational::inverse() const {
  std::map<std::uint64_t, std::int64_t> inv;
  for (auto& [p, e] : factors_) inv[p] = -e;
  return FactoredRational(Unchecked{}, sign_, std::move(inv));
}

FactoredRational FactoredRational::pow(std::int64_t e) const {
  if (e == 0) return FactoredRational();
  std::map<std::uint64_t, std::int64_t> out;
  for (auto& [p, ex] : factors_) out[p] = ex * e;
  int s = (sign_ == -1 && (e % 2 != 0)) ? -1 : 1;
  return FactoredRational(Unchecked{}, s, std::move(out));
}

PrimePool::PrimePool(std::uint64_t bound) : bound_(bound) {
  if (bound < 2) fail(Errc::parameter, "prime pool bound must be >= 2");
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes_.push_back(p);
    for (std::uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
}

namespace {

// Shared sieve for the default bound; rebuilt only when a larger bound shows up.
const PrimePool& pool_for(std::uint64_t bound) {
  static const PrimePool small(1'000'000);
  if (bound <= small.bound()) return small;
  thread_local PrimePool big(bound);
  if (big.bound() < bound) big = PrimePool(bound);
  return big;
}

void accumulate_factors(mpz_class n, std::uint64_t bound, std::int64_t direction,
                        std::map<std::uint64_t, std::int64_t>& factors) {
  const PrimePool& pool = pool_for(bound);
  for (std::uint64_t p : pool.primes()) {
    if (p > bound) break;
    if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) return;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63 &&
        p * p > mpz_get_ui(n.get_mpz_t())) break;  // remaining cofactor is 1 or prime
    std::int64_t e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
    if (e) factors[p] += direction * e;
  }
  if (mpz_cmp_ui(n.get_mpz_t(), 1) == 0) return;
  // n is now prime (no factor <= sqrt survived) or sits above the bound.
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    std::uint64_t residue = mpz_get_ui(n.get_mpz_t());
    if (residue <= bound && is_prime_u64(residue)) {
      factors[residue] += direction;
      return;
    }
  }
  fail(Errc::unfactored_residue,
       "cofactor " + n.get_str() + " exceeds factorization bound " + std::to_string(bound));
}

}  // namespace

FactoredRational factor(const mpz_class& n, std::uint64_t bound) {
  if (n == 0) fail(Errc::zero_element, "cannot factor zero");
  std::map<std::uint64_t, std::int64_t> factors;
  accumulate_factors(abs(n), bound, +1, factors);
  return FactoredRational(FactoredRational::Unchecked{}, sgn(n), std::move(factors));
}

FactoredRational factor(const Rat& q, std::uint64_t bound) {
  if (q.is_zero()) fail(Errc::zero_element, "cannot factor zero");
  std::map<std::uint64_t, std::int64_t> factors;
  accumulate_factors(abs(q.num()), bound, +1, factors);
  accumulate_factors(q.den(), bound, -1, factors);
  return FactoredRational(FactoredRational::Unchecked{}, q.sign(), std::move(factors));
}

}  // namespace sumprod
