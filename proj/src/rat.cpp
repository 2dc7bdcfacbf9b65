#include "rat.hpp"

#include <cmath>

#include "errors.hpp"

namespace sumprod {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::invalid_input, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(mpz_class(s));
    return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    fail(Errc::invalid_input, "unparsable rational: '" + s + "'");
  }
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) fail(Errc::zero_element, "division by zero");
  return Rat(mpq_class(q_ / o.q_));
}

Rat Rat::inverse() const {
  if (is_zero()) fail(Errc::zero_element, "inverse of zero");
  return Rat(den(), num());
}

Rat Rat::pow(long e) const { return pow_rat(*this, e); }

std::string Rat::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t hash_mpz(const mpz_class& z, std::uint64_t h) {
  const mpz_srcptr p = z.get_mpz_t();
  h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::int64_t>(p->_mp_size)));
  const mp_limb_t* limbs = mpz_limbs_read(p);
  int n = std::abs(p->_mp_size);
  for (int i = 0; i < n; ++i) h = mix64(h ^ static_cast<std::uint64_t>(limbs[i]));
  return h;
}

}  // namespace

std::size_t Rat::hash() const {
  std::uint64_t h = 0x51ed27f4c2a9d3b7ULL;
  h = hash_mpz(num(), h);
  h = hash_mpz(den(), h);
  return static_cast<std::size_t>(h);
}

double log_mpz(const mpz_class& n) {
  signed long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base.is_zero()) {
    if (e < 0) fail(Errc::zero_element, "negative power of zero");
    return Rat(0);
  }
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Rat out(pow_mpz(base.num(), a), pow_mpz(base.den(), a));
  return e < 0 ? out.inverse() : out;
}

}  // namespace sumprod
