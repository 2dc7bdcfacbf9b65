#include <doctest.h>

#include "factored.hpp"
#include "oracles.hpp"
#include "rat.hpp"
#include "rng.hpp"

using namespace sumprod;
using oracles::throws_errc;

TEST_SUITE_BEGIN("factored");

TEST_CASE("rationals canonicalize and parse") {
  CHECK(Rat(mpz_class(2), mpz_class(4)) == Rat(mpz_class(1), mpz_class(2)));
  CHECK(Rat::parse("3/4").str() == "3/4");
  CHECK(Rat::parse("-6/4").str() == "-3/2");
  CHECK(Rat::parse("360").str() == "360");
  CHECK(Rat::parse("3/4") + Rat::parse("1/4") == Rat(1));
  CHECK(Rat(3) / Rat(4) == Rat::parse("3/4"));
  CHECK(Rat::parse("3/4").inverse() == Rat::parse("4/3"));
  CHECK(Rat(-2).pow(3) == Rat(-8));
  CHECK(Rat(2).pow(-2) == Rat::parse("1/4"));
  CHECK(throws_errc([] { Rat::parse("abc"); }, Errc::invalid_input));
  CHECK(throws_errc([] { Rat(1) / Rat(0); }, Errc::zero_element));
  CHECK(throws_errc([] { Rat(0).inverse(); }, Errc::zero_element));
}

TEST_CASE("equal values hash equally") {
  Rat a(mpz_class(10), mpz_class(4));
  Rat b(mpz_class(5), mpz_class(2));
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(Rat(2).hash() != Rat(-2).hash());
}

TEST_CASE("primality is deterministic") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));         // Carmichael
  CHECK(is_prime_u64((1ULL << 61) - 1));  // Mersenne prime
  CHECK_FALSE(is_prime_u64((1ULL << 62) - 1));
  CHECK(is_prime_u64(1000003));
  CHECK_NOTHROW(Prime(97));
  CHECK(throws_errc([] { Prime(91); }, Errc::invalid_input));
}

TEST_CASE("factoring matches the worked examples") {
  FactoredRational f12 = factor(mpz_class(12), 100);
  CHECK(f12.sign() == 1);
  CHECK(f12.factors() == std::map<std::uint64_t, std::int64_t>{{2, 2}, {3, 1}});

  FactoredRational f34 = factor(Rat::parse("3/4"), 100);
  CHECK(f34.sign() == 1);
  CHECK(f34.factors() == std::map<std::uint64_t, std::int64_t>{{2, -2}, {3, 1}});

  FactoredRational fm1 = factor(mpz_class(-1), 100);
  CHECK(fm1.sign() == -1);
  CHECK(fm1.factors().empty());

  CHECK(throws_errc([] { factor(mpz_class(101), 100); }, Errc::unfactored_residue));
  CHECK(throws_errc([] { factor(mpz_class(0), 100); }, Errc::zero_element));
  // 1000003 is prime and above the default bound.
  CHECK(throws_errc([] { factor(mpz_class(1000003) * 4); }, Errc::unfactored_residue));
}

TEST_CASE("omega and valuations") {
  CHECK(factor(mpz_class(360)).omega() == 3);
  CHECK(factor(mpz_class(1)).omega() == 0);
  CHECK(factor(Rat::parse("3/4")).omega() == 2);
  CHECK(factor(mpz_class(12)).valuation(2) == 2);
  CHECK(factor(mpz_class(12)).valuation(5) == 0);
  CHECK(factor(Rat::parse("3/4")).valuation(2) == -2);
}

TEST_CASE("Q_S membership") {
  CHECK(factor(Rat::parse("4/3")).supported_on({2, 3}));
  CHECK_FALSE(factor(mpz_class(5)).supported_on({2, 3}));
  CHECK(factor(mpz_class(1)).supported_on({}));
}

TEST_CASE("support split follows the sign convention") {
  auto s = factor(mpz_class(12)).split_support({2});
  CHECK(s.outside.value() == Rat(3));
  CHECK(s.inside.value() == Rat(4));

  s = factor(mpz_class(27)).split_support({2});
  CHECK(s.outside.value() == Rat(27));
  CHECK(s.inside.value() == Rat(1));

  s = factor(mpz_class(-8)).split_support({2});
  CHECK(s.outside.value() == Rat(-1));
  CHECK(s.inside.value() == Rat(8));
}

TEST_CASE("values, products, inverses") {
  FactoredRational f(1, {{2, -2}, {3, 1}});
  CHECK(f.value() == Rat::parse("3/4"));
  CHECK(factor(mpz_class(2)).times(factor(Rat::parse("1/2"))).factors().empty());
  CHECK(factor(Rat::parse("3/4")).inverse().value() == Rat::parse("4/3"));
  CHECK(factor(mpz_class(12)).divided_by(factor(mpz_class(3))).value() == Rat(4));
  CHECK(factor(Rat::parse("-2/3")).pow(2).value() == Rat::parse("4/9"));
  CHECK(factor(Rat::parse("-2/3")).pow(3).value() == Rat::parse("-8/27"));
}

TEST_CASE("construction validates invariants") {
  CHECK(throws_errc([] { FactoredRational(1, {{2, 0}}); }, Errc::invalid_input));
  CHECK(throws_errc([] { FactoredRational(1, {{4, 1}}); }, Errc::invalid_input));
  CHECK(throws_errc([] { FactoredRational(2, {}); }, Errc::invalid_input));
}

TEST_CASE("random factored rationals round-trip and compose") {
  Rng rng(42);
  const std::vector<std::uint64_t> pool{2, 3, 5, 7, 11, 13};
  auto random_factored = [&]() {
    std::map<std::uint64_t, std::int64_t> fmap;
    for (std::size_t idx : rng.sample_indices(pool.size(), 1 + rng.below(3))) {
      std::int64_t e = rng.range(1, 4);
      if (rng.coin()) e = -e;
      fmap[pool[idx]] = e;
    }
    return FactoredRational(rng.coin() ? 1 : -1, std::move(fmap));
  };
  for (int trial = 0; trial < 200; ++trial) {
    FactoredRational x = random_factored();
    FactoredRational y = random_factored();

    CHECK(factor(x.value()) == x);  // round trip through the exact value

    FactoredRational xy = x.times(y);
    CHECK(xy.value() == x.value() * y.value());
    CHECK(xy.omega() <= x.omega() + y.omega());
    bool disjoint_support = true;
    for (auto& [p, e] : x.factors())
      if (y.valuation(p) != 0) disjoint_support = false;
    if (disjoint_support) CHECK(xy.omega() == x.omega() + y.omega());
    for (std::uint64_t p : pool) CHECK(xy.valuation(p) == x.valuation(p) + y.valuation(p));

    PrimeSet s{2, 5, 13};
    auto split = x.split_support(s);
    CHECK(split.outside.value() * split.inside.value() == x.value());
    CHECK(split.inside.supported_on(s));
    CHECK(split.inside.sign() == 1);
    for (auto& [p, e] : split.outside.factors()) CHECK(s.count(p) == 0);
  }
}

TEST_SUITE_END();
