#include <doctest.h>

#include <sumprod.h>

#include <cstring>
#include <string>

#include <json.hpp>

namespace {

struct Ctx {
  sp_ctx* ptr = sp_ctx_new();
  ~Ctx() { sp_ctx_free(ptr); }
};

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  sp_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("capi");

TEST_CASE("context lifecycle and configuration") {
  Ctx ctx;
  REQUIRE(ctx.ptr != nullptr);
  CHECK(std::string(sp_ctx_last_error(ctx.ptr)).empty());
  CHECK(sp_ctx_set_threads(ctx.ptr, 4) == SP_OK);
  CHECK(sp_ctx_set_threads(ctx.ptr, 0) == SP_INVALID_INPUT);
  CHECK(sp_ctx_set_budget(ctx.ptr, SP_BUDGET_ENUMERATION, 1000) == SP_OK);
  CHECK(sp_ctx_set_budget(ctx.ptr, SP_BUDGET_ENUMERATION, 0) == SP_INVALID_INPUT);
  CHECK(std::string(sp_version()) == "0.1.0");
}

TEST_CASE("set generation, parsing, stats") {
  Ctx ctx;
  sp_set* set = nullptr;
  REQUIRE(sp_set_generate(ctx.ptr, R"({"kind":"geometric","q":"2","n":10})", &set) == SP_OK);
  CHECK(sp_set_size(set) == 10);

  char* json = nullptr;
  REQUIRE(sp_set_to_json(ctx.ptr, set, &json) == SP_OK);
  std::string text = take(json);
  CHECK(text.find("\"family\"") != std::string::npos);

  sp_set* parsed = nullptr;
  REQUIRE(sp_set_parse(ctx.ptr, text.c_str(), &parsed) == SP_OK);
  CHECK(sp_set_size(parsed) == 10);

  int32_t ms[] = {2, 3};
  char* csv = nullptr;
  REQUIRE(sp_stats_csv(ctx.ptr, parsed, ms, 2, 1, &csv) == SP_OK);
  std::string rows = take(csv);
  CHECK(rows.find("family,seed,n,") == 0);
  CHECK(rows.find("geometric(q=2;n=10),0,10,55,91,19,154") != std::string::npos);

  sp_set_free(parsed);
  sp_set_free(set);
}

TEST_CASE("errors carry status and message") {
  Ctx ctx;
  sp_set* set = nullptr;
  CHECK(sp_set_parse(ctx.ptr, "definitely not json", &set) == SP_INVALID_INPUT);
  CHECK(std::string(sp_ctx_last_error(ctx.ptr)).find("invalid_input") != std::string::npos);
  CHECK(sp_set_parse(ctx.ptr, nullptr, &set) == SP_INVALID_INPUT);

  // Budget violations map to their own status.
  CHECK(sp_ctx_set_budget(ctx.ptr, SP_BUDGET_ENUMERATION, 3) == SP_OK);
  char* csv = nullptr;
  int64_t hs[] = {2};
  CHECK(sp_sunit_scan(ctx.ptr, R"({"a0":"1","coeffs":["1","-1"]})",
                      R"({"generators":[{"int":"2"}],"torsion":true})", hs, 1,
                      &csv) == SP_BUDGET_EXCEEDED);
  CHECK(std::string(sp_ctx_last_error(ctx.ptr)).find("enumeration") != std::string::npos);
}

TEST_CASE("sunit scan emits the frozen CSV") {
  Ctx ctx;
  char* csv = nullptr;
  int64_t hs[] = {1, 2, 3, 4};
  REQUIRE(sp_sunit_scan(ctx.ptr, R"({"a0":"1","coeffs":["1","-1"]})",
                        R"({"generators":[{"int":"2"}],"torsion":true})", hs, 4, &csv) == SP_OK);
  CHECK(take(csv) ==
        "H,nondegenerate_count,degenerate_count\n1,3,0\n2,3,0\n3,3,0\n4,3,0\n");
}

TEST_CASE("covering certificates through the C surface") {
  Ctx ctx;
  sp_set* set = nullptr;
  REQUIRE(sp_set_generate(
              ctx.ptr,
              R"({"kind":"random_few_prime","pool":[2,3,5,7,11],"k":2,"e_max":3,"size":20,"seed":5,"integer_mode":false})",
              &set) == SP_OK);
  char* cert = nullptr;
  REQUIRE(sp_cover(ctx.ptr, set, nullptr, 2, 2, 1, &cert) == SP_OK);
  auto j = nlohmann::ordered_json::parse(take(cert));
  CHECK(j["all_hold"] == true);
  CHECK(j["variant"] == 1);
  sp_set_free(set);
}

TEST_CASE("verify suites and per-set checks") {
  Ctx ctx;
  char* jsonl = nullptr;
  char* csv = nullptr;
  REQUIRE(sp_verify(ctx.ptr, "holder", 3, 2, 8, &jsonl, &csv) == SP_OK);
  std::string lines = take(jsonl);
  CHECK(lines.find("holder_energy_m2") != std::string::npos);
  CHECK(take(csv).find("name,holds,") == 0);
  CHECK(sp_verify(ctx.ptr, "bogus", 1, 1, 8, &jsonl, nullptr) == SP_INVALID_INPUT);

  sp_set* set = nullptr;
  REQUIRE(sp_set_generate(ctx.ptr, R"({"kind":"geometric","q":"3","n":6})", &set) == SP_OK);
  REQUIRE(sp_verify_set(ctx.ptr, set, &jsonl, nullptr) == SP_OK);
  CHECK(take(jsonl).find("popular_mass_ge_half") != std::string::npos);
  sp_set_free(set);
}

TEST_CASE("sweeps are byte-stable across contexts and worker counts") {
  const char* grid = R"({
    "ms": [2],
    "families": [
      {"kind": "geometric", "q": "2", "n": 30},
      {"kind": "random_few_prime", "pool": [2,3], "k": 2, "e_max": 6, "size": 40,
       "seed": 11, "integer_mode": false}
    ]
  })";
  Ctx solo;
  Ctx pool;
  REQUIRE(sp_ctx_set_threads(pool.ptr, 8) == SP_OK);
  char* a = nullptr;
  char* b = nullptr;
  char* c = nullptr;
  REQUIRE(sp_sweep(solo.ptr, grid, &a) == SP_OK);
  REQUIRE(sp_sweep(solo.ptr, grid, &b) == SP_OK);
  REQUIRE(sp_sweep(pool.ptr, grid, &c) == SP_OK);
  std::string run1 = take(a), run2 = take(b), run8 = take(c);
  CHECK(run1 == run2);
  CHECK(run1 == run8);
  CHECK(run1.find("family,seed,n,") == 0);
}

TEST_SUITE_END();
