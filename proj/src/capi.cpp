#include "sumprod.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "errors.hpp"
#include "exec.hpp"
#include "experiments.hpp"
#include "families.hpp"
#include "finite_set.hpp"
#include "io.hpp"
#include "verify.hpp"

struct sp_ctx {
  sumprod::Exec exec;
  std::string last_error;
};

struct sp_set {
  sumprod::FiniteSet set;
  std::optional<sumprod::FamilySpec> family;
};

namespace {

sp_status status_of(sumprod::Errc kind) {
  switch (kind) {
    case sumprod::Errc::memory_budget:
    case sumprod::Errc::brute_force_budget:
    case sumprod::Errc::enumeration_budget:
      return SP_BUDGET_EXCEEDED;
    default:
      return SP_INVALID_INPUT;
  }
}

template <class F>
sp_status guarded(sp_ctx* ctx, F f) {
  if (ctx == nullptr) return SP_INVALID_INPUT;
  ctx->last_error.clear();
  try {
    return f();
  } catch (const sumprod::Error& e) {
    ctx->last_error = std::string(sumprod::errc_name(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal: ") + e.what();
    return SP_INTERNAL_ERROR;
  }
}

sp_status require(sp_ctx* ctx, bool ok, const char* what) {
  if (ok) return SP_OK;
  ctx->last_error = std::string("invalid_input: ") + what;
  return SP_INVALID_INPUT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sumprod::FamilySpec family_for(const sp_set* set) {
  if (set->family) return *set->family;
  sumprod::FamilySpec spec;
  spec.kind = sumprod::FamilySpec::Kind::explicit_set;
  spec.elements = set->set.values();
  return spec;
}

sp_status emit_reports(sp_ctx* ctx, std::vector<sumprod::CheckReport> reports, char** out_jsonl,
                       char** out_csv) {
  if (out_jsonl != nullptr) *out_jsonl = dup_string(sumprod::io::reports_to_jsonl(reports));
  if (out_csv != nullptr) *out_csv = dup_string(sumprod::io::reports_to_csv(reports));
  if (!sumprod::all_hold(reports)) {
    ctx->last_error = "check_failed: at least one assertion-grade check does not hold";
    return SP_CHECK_FAILED;
  }
  return SP_OK;
}

}  // namespace

extern "C" {

sp_ctx* sp_ctx_new(void) {
  try {
    return new sp_ctx{};
  } catch (...) {
    return nullptr;
  }
}

void sp_ctx_free(sp_ctx* ctx) { delete ctx; }

const char* sp_ctx_last_error(const sp_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

sp_status sp_ctx_set_threads(sp_ctx* ctx, int32_t threads) {
  if (ctx == nullptr) return SP_INVALID_INPUT;
  if (threads < 1 || threads > 256) return require(ctx, false, "threads must be in [1, 256]");
  ctx->exec.threads = static_cast<unsigned>(threads);
  return SP_OK;
}

sp_status sp_ctx_set_budget(sp_ctx* ctx, sp_budget which, uint64_t value) {
  if (ctx == nullptr) return SP_INVALID_INPUT;
  if (value == 0) return require(ctx, false, "budgets must be positive");
  switch (which) {
    case SP_BUDGET_COUNTER_ENTRIES: ctx->exec.budgets.counter_entries = value; return SP_OK;
    case SP_BUDGET_ENUMERATION: ctx->exec.budgets.enumeration = value; return SP_OK;
    case SP_BUDGET_MATRIX_DIM: ctx->exec.budgets.matrix_dim = value; return SP_OK;
    case SP_BUDGET_BRUTE_FORCE: ctx->exec.budgets.brute_force = value; return SP_OK;
    case SP_BUDGET_PAIR_OPS: ctx->exec.budgets.pair_ops = value; return SP_OK;
  }
  return require(ctx, false, "unknown budget selector");
}

sp_status sp_set_parse(sp_ctx* ctx, const char* json_text, sp_set** out_set) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, json_text && out_set, "null argument"); s != SP_OK) return s;
    auto parsed = sumprod::io::ordered_json::parse(json_text, nullptr, false);
    if (parsed.is_discarded())
      sumprod::fail(sumprod::Errc::invalid_input, "set file is not valid JSON");
    auto set = sumprod::io::set_from_json(json_text);
    std::optional<sumprod::FamilySpec> family;
    if (parsed.is_object() && parsed.contains("family"))
      family = sumprod::io::family_from_json(parsed["family"]);
    *out_set = new sp_set{std::move(set), std::move(family)};
    return SP_OK;
  });
}

sp_status sp_set_generate(sp_ctx* ctx, const char* family_json, sp_set** out_set) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, family_json && out_set, "null argument"); s != SP_OK) return s;
    sumprod::FamilySpec spec = sumprod::io::family_from_json_text(family_json);
    *out_set = new sp_set{sumprod::generate(spec), std::move(spec)};
    return SP_OK;
  });
}

void sp_set_free(sp_set* set) { delete set; }

int64_t sp_set_size(const sp_set* set) {
  return set == nullptr ? -1 : static_cast<int64_t>(set->set.size());
}

sp_status sp_set_to_json(sp_ctx* ctx, const sp_set* set, char** out_json) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, set && out_json, "null argument"); s != SP_OK) return s;
    *out_json = dup_string(sumprod::io::set_file_json(set->set, set->family));
    return SP_OK;
  });
}

sp_status sp_stats_csv(sp_ctx* ctx, const sp_set* set, const int32_t* ms, size_t ms_len,
                       int32_t include_header, char** out_csv) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, set && out_csv && (ms || ms_len == 0), "null argument");
        s != SP_OK)
      return s;
    std::vector<unsigned> orders;
    for (size_t i = 0; i < ms_len; ++i) {
      if (ms[i] < 1) sumprod::fail(sumprod::Errc::parameter, "m-list entries must be >= 1");
      orders.push_back(static_cast<unsigned>(ms[i]));
    }
    if (orders.empty()) orders = {2};
    *out_csv = dup_string(sumprod::stats_csv_for_set(set->set, orders, family_for(set),
                                                     include_header != 0, ctx->exec));
    return SP_OK;
  });
}

sp_status sp_cover(sp_ctx* ctx, const sp_set* a, const sp_set* b, int32_t k, int32_t l,
                   int32_t variant, char** out_certificate_json) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, a && out_certificate_json, "null argument"); s != SP_OK)
      return s;
    if (k < 1 || l < 1) sumprod::fail(sumprod::Errc::parameter, "k and l must be >= 1");
    const sumprod::FiniteSet& bset = b == nullptr ? a->set : b->set;
    sumprod::CoveringCertificate cert =
        sumprod::cover_pipeline(a->set, bset, static_cast<unsigned>(k), static_cast<unsigned>(l),
                                variant, ctx->exec);
    *out_certificate_json = dup_string(sumprod::io::certificate_to_json(cert));
    if (!cert.all_hold()) {
      ctx->last_error = "check_failed: a certificate inequality does not hold";
      return SP_CHECK_FAILED;
    }
    return SP_OK;
  });
}

sp_status sp_sunit_scan(sp_ctx* ctx, const char* equation_json, const char* group_json,
                        const int64_t* h_values, size_t h_len, char** out_csv) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, equation_json && group_json && h_values && h_len > 0 && out_csv,
                              "null argument");
        s != SP_OK)
      return s;
    sumprod::EquationInstance eq = sumprod::io::equation_from_json_text(equation_json);
    sumprod::GroupSpec group = sumprod::io::group_from_json_text(group_json);
    std::vector<std::int64_t> hs(h_values, h_values + h_len);
    sumprod::StabilizationScan scan = sumprod::stabilization_scan(eq, group, hs, ctx->exec);
    *out_csv = dup_string(sumprod::io::scan_to_csv(scan));
    return SP_OK;
  });
}

sp_status sp_verify(sp_ctx* ctx, const char* suite, uint64_t seed, uint64_t instances,
                    uint64_t max_size, char** out_jsonl, char** out_csv) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, suite != nullptr, "null suite"); s != SP_OK) return s;
    sumprod::SuiteConfig config;
    config.seed = seed;
    config.instances = static_cast<std::size_t>(instances);
    config.max_size = static_cast<std::size_t>(max_size);
    auto reports = sumprod::run_suite(suite, config, ctx->exec);
    return emit_reports(ctx, std::move(reports), out_jsonl, out_csv);
  });
}

sp_status sp_verify_set(sp_ctx* ctx, const sp_set* set, char** out_jsonl, char** out_csv) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, set != nullptr, "null set"); s != SP_OK) return s;
    auto reports = sumprod::checks_for_set(set->set, ctx->exec);
    return emit_reports(ctx, std::move(reports), out_jsonl, out_csv);
  });
}

sp_status sp_sweep(sp_ctx* ctx, const char* grid_json, char** out_csv) {
  return guarded(ctx, [&]() -> sp_status {
    if (sp_status s = require(ctx, grid_json && out_csv, "null argument"); s != SP_OK) return s;
    sumprod::SweepGrid grid = sumprod::sweep_grid_from_json_text(grid_json);
    *out_csv = dup_string(sumprod::run_sweep(grid, ctx->exec));
    return SP_OK;
  });
}

void sp_string_free(char* text) { std::free(text); }

const char* sp_version(void) { return "0.1.0"; }

}  // extern "C"
