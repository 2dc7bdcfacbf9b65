#include <doctest.h>

#include "counter.hpp"
#include "covering.hpp"
#include "energy.hpp"
#include "io.hpp"
#include "oracles.hpp"
#include "sunit.hpp"

using namespace sumprod;
using oracles::throws_errc;

TEST_SUITE_BEGIN("io");

TEST_CASE("element forms round-trip") {
  auto factored = io::element_from_json(io::ordered_json::parse(R"({"sign":1,"factors":{"2":3,"5":-1}})"));
  CHECK(factored.value == Rat::parse("8/5"));
  REQUIRE(factored.factorization.has_value());
  CHECK(factored.factorization->valuation(5) == -1);

  auto from_int = io::element_from_json(io::ordered_json::parse(R"({"int":"360"})"));
  CHECK(from_int.value == Rat(360));
  REQUIRE(from_int.factorization.has_value());
  CHECK(from_int.factorization->omega() == 3);

  auto from_number = io::element_from_json(io::ordered_json::parse(R"({"int":-12})"));
  CHECK(from_number.value == Rat(-12));

  auto from_rat = io::element_from_json(io::ordered_json::parse(R"({"rat":"3/4"})"));
  CHECK(from_rat.value == Rat::parse("3/4"));
  CHECK(from_rat.factorization.has_value());

  // Prime above the ingestion bound: raw for "rat", an error for "int".
  auto raw = io::element_from_json(io::ordered_json::parse(R"({"rat":"1000003"})"));
  CHECK_FALSE(raw.factorization.has_value());
  CHECK(throws_errc(
      [] { io::element_from_json(io::ordered_json::parse(R"({"int":"1000003"})")); },
      Errc::unfactored_residue));

  CHECK(throws_errc([] { io::element_from_json(io::ordered_json::parse(R"({"sign":1})")); },
                    Errc::invalid_input));
  CHECK(throws_errc(
      [] { io::element_from_json(io::ordered_json::parse(R"({"sign":1,"factors":{"4":1}})")); },
      Errc::invalid_input));
  CHECK(throws_errc(
      [] { io::element_from_json(io::ordered_json::parse(R"({"sign":1,"factors":{"2":0}})")); },
      Errc::invalid_input));
}

TEST_CASE("set files serialize canonically") {
  std::vector<Rat> vals{Rat(12), Rat(-1), Rat::parse("3/4")};
  std::vector<FactoredRational> factors{factor(mpz_class(12)), factor(mpz_class(-1)),
                                        factor(Rat::parse("3/4"))};
  FiniteSet s(std::move(vals), std::move(factors));
  std::string text = io::set_file_json(s, std::nullopt);

  FiniteSet parsed = io::set_from_json(text);
  CHECK(parsed == s);
  REQUIRE(parsed.has_factorizations());
  CHECK(io::set_file_json(parsed, std::nullopt) == text);  // canonical fixed point

  // Ascending elements: -1 < 3/4 < 12.
  CHECK(text.find("\"-1\"") == std::string::npos);  // factored form, no raw fallback
  std::size_t pos_m1 = text.find("\"sign\": -1");
  std::size_t pos_34 = text.find("\"3\": 1");
  CHECK(pos_m1 != std::string::npos);
  CHECK(pos_34 != std::string::npos);
  CHECK(pos_m1 < pos_34);
}

TEST_CASE("factor keys ascend numerically") {
  FiniteSet s(std::vector<Rat>{Rat(2 * 3 * 13)}, {factor(mpz_class(2 * 3 * 13))});
  std::string text = io::set_file_json(s, std::nullopt);
  std::size_t p2 = text.find("\"2\"");
  std::size_t p3 = text.find("\"3\"");
  std::size_t p13 = text.find("\"13\"");
  REQUIRE(p2 != std::string::npos);
  REQUIRE(p3 != std::string::npos);
  REQUIRE(p13 != std::string::npos);
  CHECK(p2 < p3);
  CHECK(p3 < p13);  // numeric order, not lexicographic
}

TEST_CASE("bare arrays and unfactorable sums parse") {
  FiniteSet bare = io::set_from_json(R"([{"int":"3"},{"int":"5"}])");
  CHECK(bare.size() == 2);
  CHECK(bare.has_factorizations());

  // 0 is a valid additive element; it parses raw and round-trips.
  FiniteSet with_zero = io::set_from_json(R"([{"int":"0"},{"int":"1"}])");
  CHECK(with_zero.contains_zero());
  CHECK_FALSE(with_zero.has_factorizations());
  CHECK(io::set_from_json(io::set_file_json(with_zero, std::nullopt)) == with_zero);

  FiniteSet mixed = io::set_from_json(R"([{"rat":"1000003"},{"int":"2"}])");
  CHECK(mixed.size() == 2);
  CHECK_FALSE(mixed.has_factorizations());

  CHECK(throws_errc([] { io::set_from_json("{\"nope\":1}"); }, Errc::invalid_input));
  CHECK(throws_errc([] { io::set_from_json("not json"); }, Errc::invalid_input));
}

TEST_CASE("family specs round-trip") {
  FamilySpec spec;
  spec.kind = FamilySpec::Kind::random_few_prime;
  spec.random = {{2, 3, 5}, 2, 3, 17, 99, true};
  FamilySpec back = io::family_from_json(io::family_to_json(spec));
  CHECK(back.random.pool == spec.random.pool);
  CHECK(back.random.seed == 99);
  CHECK(back.random.integer_mode);
  CHECK(generate(back) == generate(spec));

  FamilySpec geo = io::family_from_json_text(R"({"kind":"geometric","q":"2","n":4})");
  CHECK(generate(geo).size() == 4);
  CHECK(throws_errc([] { io::family_from_json_text(R"({"kind":"wat"})"); }, Errc::invalid_input));
}

TEST_CASE("equation and group specs parse") {
  EquationInstance eq = io::equation_from_json_text(R"({"a0":"1","coeffs":["1","-1"]})");
  CHECK(eq.a0 == Rat(1));
  CHECK(eq.arity() == 2);
  GroupSpec g = io::group_from_json_text(R"({"generators":[{"int":"2"}],"torsion":true})");
  CHECK(g.rank() == 1);
  CHECK(g.torsion());
  CHECK(throws_errc([] { io::equation_from_json_text(R"({"a0":"0","coeffs":["1"]})"); },
                    Errc::zero_element));
}

TEST_CASE("scan and counter CSV are frozen") {
  EquationInstance eq(Rat(1), {Rat(1), Rat(-1)});
  GroupSpec g({factor(mpz_class(2))}, true);
  StabilizationScan scan = stabilization_scan(eq, g, {1, 2});
  CHECK(io::scan_to_csv(scan) == "H,nondegenerate_count,degenerate_count\n1,3,0\n2,3,0\n");

  FiniteSet a(std::vector<Rat>{Rat(1), Rat(2), Rat(3)});
  CHECK(io::counter_to_csv(convolve(a, a)) ==
        "value,multiplicity\n2,1\n3,2\n4,3\n5,2\n6,1\n");
}

TEST_CASE("reports serialize as JSONL and CSV") {
  auto r = make_report("demo", Rat(3), Relation::ge, Rat(2), {{"k", "2"}});
  std::string jsonl = io::reports_to_jsonl({r});
  CHECK(jsonl.find("\"demo\"") != std::string::npos);
  CHECK(jsonl.find('\n') == jsonl.size() - 1);
  auto parsed = io::ordered_json::parse(jsonl.substr(0, jsonl.size() - 1));
  CHECK(parsed["holds"] == true);
  CHECK(parsed["lhs"] == "3");

  std::string csv = io::reports_to_csv({r});
  CHECK(csv == "name,holds,report_only,lhs,relation,rhs,params\ndemo,1,0,3,>=,2,k=2\n");
}

TEST_CASE("certificates serialize with checks") {
  FiniteSet a = io::set_from_json(R"([{"int":"2"},{"int":"4"},{"int":"8"},{"int":"27"}])");
  CoveringCertificate cert = cover_pipeline(a, a, 1, 1, 1);
  std::string text = io::certificate_to_json(cert);
  auto j = io::ordered_json::parse(text);
  CHECK(j["kind"] == "covering_certificate");
  CHECK(j["S"] == io::ordered_json::array({2}));
  CHECK(j["all_hold"] == true);
  CHECK(j["checks"].is_array());
  CHECK(j["classes"].size() == 2);
}

TEST_SUITE_END();
