#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sumprod {

// Canonical reduced rational: gcd(|num|, den) = 1, den >= 1. Equal values
// have identical representation, so Rat doubles as a hash key for all the
// additive arithmetic. Prime support is not tracked here; see FactoredRational.
class Rat {
public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors integer literals
  explicit Rat(const mpz_class& n) : q_(n) {}
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "n" or "n/d" with arbitrary precision.
  static Rat parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  Rat inverse() const;
  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  Rat pow(long e) const;

  bool operator==(const Rat& o) const { return q_ == o.q_; }
  std::strong_ordering operator<=>(const Rat& o) const {
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  std::size_t hash() const;

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

struct RatHash {
  std::size_t operator()(const Rat& r) const { return r.hash(); }
};

// log|n| for nonzero big integers, usable far beyond double range.
double log_mpz(const mpz_class& n);

// base^e for e >= 0.
mpz_class pow_mpz(const mpz_class& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

}  // namespace sumprod
