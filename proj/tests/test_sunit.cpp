#include <doctest.h>

#include <algorithm>

#include "counter.hpp"
#include "oracles.hpp"
#include "rng.hpp"
#include "sunit.hpp"

using namespace sumprod;
using oracles::throws_errc;

namespace {

GroupSpec two_with_torsion() { return GroupSpec({factor(mpz_class(2))}, true); }

GroupSpec two_three(bool torsion) {
  return GroupSpec({factor(mpz_class(2)), factor(mpz_class(3))}, torsion);
}

}  // namespace

TEST_SUITE_BEGIN("sunit");

TEST_CASE("group specs validate independence") {
  CHECK(two_with_torsion().rank() == 1);
  CHECK(two_three(false).rank() == 2);
  CHECK(GroupSpec({factor(mpz_class(6)), factor(mpz_class(10)), factor(mpz_class(15))}, false)
            .rank() == 3);
  CHECK(throws_errc([] { GroupSpec({factor(mpz_class(2)), factor(mpz_class(4))}, false); },
                    Errc::invalid_input));
  CHECK(throws_errc([] { GroupSpec({factor(mpz_class(-1))}, false); }, Errc::invalid_input));
  CHECK(throws_errc(
      [] { GroupSpec({factor(mpz_class(6)), factor(mpz_class(10)), factor(mpz_class(60))}, false); },
      Errc::invalid_input));  // 60 = 6 * 10
}

TEST_CASE("boxed enumeration") {
  FiniteSet slice = enumerate_group(two_with_torsion(), ExponentBox{1});
  CHECK(slice == FiniteSet(std::vector<Rat>{Rat::parse("-2"), Rat::parse("-1"),
                                            Rat::parse("-1/2"), Rat::parse("1/2"), Rat(1),
                                            Rat(2)}));
  CHECK(enumerate_group(GroupSpec({}, true), ExponentBox{1}) ==
        FiniteSet(std::vector<Rat>{Rat(-1), Rat(1)}));
  CHECK(enumerate_group(two_three(false), ExponentBox{1}).size() == 9);

  Exec tiny;
  tiny.budgets.enumeration = 5;
  CHECK(throws_errc([&] { enumerate_group(two_three(true), ExponentBox{2}, tiny); },
                    Errc::enumeration_budget));
}

TEST_CASE("membership by exponent solving agrees with enumeration") {
  GroupSpec g = two_three(true);
  ExponentBox box{2};
  FiniteSet slice = enumerate_group(g, box);
  for (const Rat& v : slice.values()) CHECK(boxed_member(g, box, v));
  CHECK_FALSE(boxed_member(g, box, Rat(5)));
  CHECK_FALSE(boxed_member(g, box, Rat(8)));  // exponent 3 > H
  CHECK(boxed_member(g, box, Rat(12)));
  CHECK(boxed_member(g, box, Rat(-12)));
  CHECK_FALSE(boxed_member(g, box, Rat(0)));

  GroupSpec neg({factor(mpz_class(-2))}, false);
  CHECK(boxed_member(neg, box, Rat(-2)));
  CHECK(boxed_member(neg, box, Rat(4)));
  CHECK_FALSE(boxed_member(neg, box, Rat(2)));
  FiniteSet neg_slice = enumerate_group(neg, box);
  for (const Rat& v : neg_slice.values()) CHECK(boxed_member(neg, box, v));
  CHECK(neg_slice.size() == 5);  // 1/4, -1/2, 1, -2, 4
}

TEST_CASE("unit equation z1 - z2 = 1 over <2> with torsion") {
  EquationInstance eq(Rat(1), {Rat(1), Rat(-1)});
  GroupSpec g = two_with_torsion();
  SolutionCount c = count_nondegenerate_solutions(eq, g, ExponentBox{4});
  CHECK(c.nondegenerate == 3);
  CHECK(c.degenerate == 0);
  REQUIRE(c.solutions.size() == 3);
  std::vector<std::vector<Rat>> expected{{Rat(2), Rat(1)},
                                         {Rat::parse("1/2"), Rat::parse("-1/2")},
                                         {Rat(-1), Rat(-2)}};
  for (const auto& sol : expected)
    CHECK(std::count(c.solutions.begin(), c.solutions.end(), sol) == 1);

  // The same count from the naive enumerator.
  SolutionCount naive = count_nondegenerate_solutions(eq, g, ExponentBox{4}, Exec{},
                                                      CountMethod::naive);
  CHECK(naive.nondegenerate == 3);
  CHECK(naive.degenerate == 0);
}

TEST_CASE("membership equations and empty instances") {
  GroupSpec g = two_with_torsion();
  EquationInstance member(Rat(4), {Rat(1)});
  CHECK(count_nondegenerate_solutions(member, g, ExponentBox{3}).nondegenerate == 1);
  EquationInstance outside(Rat(5), {Rat(1)});
  CHECK(count_nondegenerate_solutions(outside, g, ExponentBox{3}).nondegenerate == 0);
  CHECK(throws_errc([] { EquationInstance(Rat(0), {Rat(1)}); }, Errc::zero_element));
  CHECK(throws_errc([] { EquationInstance(Rat(1), {Rat(1), Rat(0)}); }, Errc::zero_element));
}

TEST_CASE("scan stabilizes for the unit equation") {
  EquationInstance eq(Rat(1), {Rat(1), Rat(-1)});
  StabilizationScan scan = stabilization_scan(eq, two_with_torsion(), {1, 2, 3, 4});
  REQUIRE(scan.points.size() == 4);
  for (const ScanPoint& p : scan.points) CHECK(p.nondegenerate == 3);
  CHECK(scan.stabilized);
  CHECK(scan.plateau_from == 1);

  EquationInstance none(Rat(5), {Rat(1)});
  StabilizationScan empty = stabilization_scan(none, two_with_torsion(), {1, 2, 3});
  for (const ScanPoint& p : empty.points) CHECK(p.nondegenerate == 0);
}

TEST_CASE("meet-in-the-middle equals naive enumeration") {
  Rng rng(5);
  GroupSpec g = two_three(true);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned m = 2 + static_cast<unsigned>(rng.below(2));
    std::vector<Rat> coeffs;
    for (unsigned i = 0; i < m; ++i) {
      long c = static_cast<long>(rng.range(1, 5));
      coeffs.push_back(rng.coin() ? Rat(c) : Rat(-c));
    }
    EquationInstance eq(Rat(static_cast<long>(rng.range(1, 8))), coeffs);
    for (std::int64_t h = 1; h <= 3; ++h) {
      SolutionCount fast = count_nondegenerate_solutions(eq, g, ExponentBox{h}, Exec{},
                                                         CountMethod::meet_in_middle, 0);
      SolutionCount slow = count_nondegenerate_solutions(eq, g, ExponentBox{h}, Exec{},
                                                         CountMethod::naive, 0);
      CHECK(fast.nondegenerate == slow.nondegenerate);
      CHECK(fast.degenerate == slow.degenerate);
    }
  }
}

TEST_CASE("counts are monotone in the box height") {
  Rng rng(6);
  GroupSpec g = two_three(true);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Rat> coeffs{Rat(static_cast<long>(rng.range(1, 3))),
                            Rat(-static_cast<long>(rng.range(1, 3))),
                            Rat(static_cast<long>(rng.range(1, 3)))};
    EquationInstance eq(Rat(static_cast<long>(rng.range(1, 6))), coeffs);
    StabilizationScan scan = stabilization_scan(eq, g, {1, 2, 3});
    for (std::size_t i = 1; i < scan.points.size(); ++i) {
      CHECK(scan.points[i].nondegenerate >= scan.points[i - 1].nondegenerate);
      CHECK(scan.points[i].degenerate >= scan.points[i - 1].degenerate);
    }
  }
}

TEST_CASE("degenerate solutions are counted separately") {
  // z1 + z2 + z3 = 1 admits tuples like (1, 2, -2) whose pair subsum vanishes.
  EquationInstance eq(Rat(1), {Rat(1), Rat(1), Rat(1)});
  SolutionCount c = count_nondegenerate_solutions(eq, two_with_torsion(), ExponentBox{2});
  CHECK(c.degenerate > 0);
  mpz_class total = c.nondegenerate + c.degenerate;
  SolutionCount naive =
      count_nondegenerate_solutions(eq, two_with_torsion(), ExponentBox{2}, Exec{},
                                    CountMethod::naive);
  CHECK(naive.nondegenerate + naive.degenerate == total);
}

TEST_CASE("quotient graph on the worked example") {
  GroupSpec g = two_with_torsion();
  FiniteSet b(std::vector<Rat>{Rat(1)});
  QuotientGraphSummary q = quotient_graph(b, g, ExponentBox{2}, Rat(1));
  CHECK(q.vertex_count == 1);
  CHECK(q.edge_count == 1);  // 2*1 - 1*1 = 1
  CHECK(q.max_out_degree == 1);
  CHECK(q.degree_stat == Rat(1));

  QuotientGraphSummary none = quotient_graph(b, g, ExponentBox{2}, Rat::parse("1/7"));
  CHECK(none.edge_count == 0);

  CHECK(throws_errc([&] { quotient_graph(b, g, ExponentBox{2}, Rat(0)); }, Errc::zero_element));
}

TEST_CASE("quotient graph reverses under x -> -x") {
  Rng rng(9);
  GroupSpec g = two_three(true);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> bvals;
    while (bvals.size() < 4) {
      long v = static_cast<long>(rng.range(-9, 9));
      if (v != 0) bvals.emplace_back(v);
    }
    FiniteSet b(std::move(bvals));
    Rat x(static_cast<long>(rng.range(1, 5)));
    QuotientGraphSummary fwd = quotient_graph(b, g, ExponentBox{2}, x);
    QuotientGraphSummary rev = quotient_graph(b, g, ExponentBox{2}, -x);
    CHECK(fwd.edge_count == rev.edge_count);
    auto reversed = rev.edges;
    for (auto& [from, to] : reversed) std::swap(from, to);
    std::sort(reversed.begin(), reversed.end());
    auto forward = fwd.edges;
    std::sort(forward.begin(), forward.end());
    CHECK(forward == reversed);
  }
}

TEST_CASE("quotient graph edges bound the set-level difference counts") {
  // A = (boxed slice) * B for coset representatives B: every pair with
  // a1 - a2 = x factors through an edge, and each edge carries at most
  // |slice| many (g1, g2) pairs.
  GroupSpec g = two_with_torsion();
  ExponentBox box{2};
  FiniteSet slice = enumerate_group(g, box);
  FiniteSet b(std::vector<Rat>{Rat(1), Rat(3)});
  FiniteSet a = product_set(slice, b);
  Counter co = co_convolve(a, a);
  int probes = 0;
  for (auto& [x, mult] : co.sorted_entries()) {
    if (x.is_zero()) continue;
    if (++probes > 12) break;
    QuotientGraphSummary q = quotient_graph(b, g, box, x);
    CHECK(q.edge_count >= 1);
    CHECK(mult <= mpz_class(static_cast<unsigned long>(q.edge_count * slice.size())));
  }
}

TEST_CASE("budgets bound the enumeration work") {
  Exec tiny;
  tiny.budgets.brute_force = 4;
  EquationInstance eq(Rat(1), {Rat(1), Rat(-1), Rat(1)});
  CHECK(throws_errc(
      [&] { count_nondegenerate_solutions(eq, two_three(true), ExponentBox{2}, tiny); },
      Errc::brute_force_budget));
  Exec small_pairs;
  small_pairs.budgets.pair_ops = 3;
  FiniteSet b(std::vector<Rat>{Rat(1), Rat(3)});
  CHECK(throws_errc([&] { quotient_graph(b, two_with_torsion(), ExponentBox{2}, Rat(1),
                                         small_pairs); },
                    Errc::enumeration_budget));
}

TEST_SUITE_END();
