#include <doctest.h>

#include <set>

#include "families.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "verify.hpp"

using namespace sumprod;
using oracles::throws_errc;

namespace {

FiniteSet ints(std::initializer_list<long> values) {
  std::vector<Rat> vs;
  for (long v : values) vs.emplace_back(v);
  return FiniteSet(std::move(vs));
}

FiniteSet interval(long n) {
  std::vector<Rat> vs;
  for (long v = 1; v <= n; ++v) vs.emplace_back(v);
  return FiniteSet(std::move(vs));
}

}  // namespace

TEST_SUITE_BEGIN("verify");

TEST_CASE("holder energy link") {
  CheckReport r = check_holder_energy(ints({1, 2}), 2);
  CHECK(r.holds);
  CHECK(r.lhs == Rat(18));  // |2A| * E_4 = 3 * 6
  CHECK(r.rhs == Rat(16));

  CheckReport singleton = check_holder_energy(ints({5}), 2);
  CHECK(singleton.holds);
  CHECK(singleton.lhs == singleton.rhs);

  CHECK(check_holder_energy(interval(10), 2).holds);
}

TEST_CASE("energy interpolation bound") {
  // n = 4, r = 1, k = 2 at x = 0 with signs (+,+,-,-): equality with E_4.
  CheckReport r = check_energy_interpolation(ints({1, 2, 5}), Rat(0), {1, 1, -1, -1}, 1, 2);
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);

  // Degenerate k = r: count at 0 with (+,-) is |A| = E_2.
  CheckReport deg = check_energy_interpolation(ints({1, 2, 5}), Rat(0), {1, -1}, 1, 1);
  CHECK(deg.holds);
  CHECK(deg.lhs == deg.rhs);

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> vs;
    std::size_t want = 4 + rng.below(9);
    while (vs.size() < want) vs.push_back(Rat(static_cast<long>(rng.range(-50, 50))));
    FiniteSet a(std::move(vs));
    std::vector<int> signs;
    unsigned n = 2 + static_cast<unsigned>(rng.below(5));
    for (unsigned i = 0; i < n; ++i) signs.push_back(rng.coin() ? 1 : -1);
    unsigned k = (n + 1) / 2 + static_cast<unsigned>(rng.below(2));
    if (k > 3) k = 3;
    unsigned r2 = 1 + static_cast<unsigned>(rng.below(n / 2));
    if (2 * k < n || r2 > k) continue;
    CHECK(check_energy_interpolation(a, Rat(static_cast<long>(rng.range(-8, 8))), signs, r2, k)
              .holds);
  }
  CHECK(throws_errc([] { check_energy_interpolation(ints({1}), Rat(0), {1, 1}, 2, 1); },
                    Errc::parameter));
}

TEST_CASE("popular sums of {0,1}") {
  PopularSetResult res = popular_set(ints({0, 1}), PopularSet::Mode::sums);
  CHECK(res.set.k_ratio == Rat(mpz_class(3), mpz_class(2)));
  CHECK(res.set.c == ints({0, 1, 2}));
  CHECK(res.set.mass == 4);
  CHECK(all_hold(res.checks));
}

TEST_CASE("popular differences of {0,1}") {
  PopularSetResult res = popular_set(ints({0, 1}), PopularSet::Mode::differences);
  CHECK(res.set.k_ratio == Rat(mpz_class(3), mpz_class(2)));
  CHECK(res.set.c == ints({-1, 0, 1}));
  CHECK(res.set.mass == 4);
  CHECK(all_hold(res.checks));
}

TEST_CASE("popular sums of an interval keep the middle") {
  PopularSetResult res = popular_set(interval(10), PopularSet::Mode::sums);
  CHECK(res.set.c.contains(Rat(11)));  // the most popular sum
  CHECK(res.set.mass * 2 >= mpz_class(100));
  CHECK(res.set.c.size() <= 19);  // C inside A+A
  CHECK(all_hold(res.checks));
}

TEST_CASE("popular sets of random few-prime sets always certify") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    FiniteSet a = random_few_prime({{2, 3, 5, 7}, 2, 3, 12, seed, false});
    CHECK(all_hold(popular_set(a, PopularSet::Mode::sums).checks));
    CHECK(all_hold(popular_set(a, PopularSet::Mode::differences).checks));
  }
}

TEST_CASE("cycle steps on the worked example") {
  auto reports = check_shkredov_steps(ints({0, 1}), ints({0, 1}), ints({1}), 2);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].name == "sidorenko_cycle_lower_bound");
  CHECK(reports[0].holds);
  CHECK(reports[0].lhs == Rat(32));  // V_4 (|A||B|)^2 = 2 * 16
  CHECK(reports[0].rhs == Rat(16));  // mass^4 = 2^4
  CHECK(reports[1].name == "cycle_cauchy_schwarz");
  CHECK(reports[1].holds);
  CHECK(reports[2].report_only);
  CHECK(all_hold(reports));
}

TEST_CASE("cycle steps with the complete sum set reach equality") {
  FiniteSet a = ints({1, 3});
  FiniteSet b = ints({0, 7});
  auto reports = check_shkredov_steps(a, b, sumset(a, b), 2);
  CHECK(reports[0].holds);
  CHECK(reports[0].lhs == reports[0].rhs);  // delta = 1
}

TEST_CASE("asymmetric energy bound") {
  CheckReport r = check_asymmetric_energy(ints({0, 1}), ints({0, 1}), 2, 2);
  CHECK(r.holds);
  CHECK(r.lhs == r.rhs);  // 36 = 36

  FiniteSet b = ints({9});
  CheckReport single = check_asymmetric_energy(interval(6), b, 2, 2);
  CHECK(single.holds);

  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> av, bv;
    std::size_t want_a = 4 + rng.below(9);
    std::size_t want_b = 4 + rng.below(9);
    while (av.size() < want_a) av.push_back(Rat(static_cast<long>(rng.range(-40, 40))));
    while (bv.size() < want_b) bv.push_back(Rat(static_cast<long>(rng.range(-40, 40))));
    FiniteSet a(std::move(av)), bb(std::move(bv));
    CHECK(check_asymmetric_energy(a, bb, 2, 2).holds);
    CHECK(check_asymmetric_energy(a, bb, 3, 2).holds);
    CHECK(check_asymmetric_energy(a, bb, 2, 3).holds);
  }
  CHECK(throws_errc([] { check_asymmetric_energy(ints({1}), ints({1}), 1, 2); }, Errc::parameter));
}

TEST_CASE("cauchy-schwarz sumset bound") {
  CheckReport r = check_cauchy_schwarz_sumset(ints({0, 1}), ints({0, 1}));
  CHECK(r.holds);
  CHECK(r.lhs == Rat(18));
  CHECK(r.rhs == Rat(16));
  CHECK(check_cauchy_schwarz_sumset(interval(12), interval(12)).holds);
}

TEST_CASE("exponent rows") {
  FiniteSet a = geometric(factor(mpz_class(2)), 10);
  StatsRow row = report_exponents(a, {2, 3});
  CHECK(row.n == 10);
  CHECK(row.sumset == 55);
  CHECK(row.diffset == 91);
  CHECK(row.prodset == 19);
  REQUIRE(row.iterated_sums.size() == 2);
  CHECK(row.iterated_sums[0].second == 55);
  CHECK(row.iterated_prods[0].second == 19);
  CHECK(row.iterated_prods[1].second == 28);

  // |A+AA| agrees with a direct ordered-set recount.
  FiniteSet aa = product_set(a, a);
  std::set<Rat> direct;
  for (const Rat& x : a.values())
    for (const Rat& y : aa.values()) direct.insert(x + y);
  CHECK(row.a_plus_aa_size == direct.size());

  CHECK(throws_errc([] { report_exponents(ints({0, 1}), {2}); }, Errc::zero_element));
}

TEST_CASE("suites run clean and tag their context") {
  SuiteConfig config;
  config.seed = 7;
  config.instances = 3;
  config.max_size = 9;
  auto reports = run_suite("all", config);
  CHECK(all_hold(reports));
  CHECK(reports.size() > 3 * 15);
  for (const auto& r : reports) {
    CHECK(r.context.count("suite") == 1);
    CHECK(r.context.count("seed") == 1);
  }
  CHECK(throws_errc([&] { run_suite("bogus", config); }, Errc::invalid_input));
}

TEST_CASE("set-applicable checks") {
  FiniteSet a = random_few_prime({{2, 3, 5}, 2, 2, 10, 4, false});
  CHECK(all_hold(checks_for_set(a)));
}

TEST_SUITE_END();
