// Command-line front end for the sumprod shared library. Everything goes
// through the C API; this file only parses arguments, moves files, and maps
// statuses to exit codes (0 ok, 1 failed check, 2 budget, 3 input error).

#include <sumprod.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::ordered_json;

struct CtxDeleter {
  void operator()(sp_ctx* c) const { sp_ctx_free(c); }
};
struct SetDeleter {
  void operator()(sp_set* s) const { sp_set_free(s); }
};
using CtxPtr = std::unique_ptr<sp_ctx, CtxDeleter>;
using SetPtr = std::unique_ptr<sp_set, SetDeleter>;

// Owned C string from the library.
struct OwnedString {
  char* data = nullptr;
  ~OwnedString() { sp_string_free(data); }
  std::string str() const { return data == nullptr ? std::string{} : std::string(data); }
};

int exit_code_of(sp_status status) {
  switch (status) {
    case SP_OK: return 0;
    case SP_CHECK_FAILED: return 1;
    case SP_BUDGET_EXCEEDED: return 2;
    case SP_INVALID_INPUT: return 3;
    default: return 4;
  }
}

[[noreturn]] void die(sp_ctx* ctx, sp_status status) {
  ordered_json j;
  j["status"] = status;
  j["error"] = sp_ctx_last_error(ctx);
  std::cerr << j.dump() << "\n";
  std::exit(exit_code_of(status));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ordered_json j;
    j["status"] = SP_INVALID_INPUT;
    j["error"] = "cannot read file: " + path;
    std::cerr << j.dump() << "\n";
    std::exit(3);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path || *path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) {
    ordered_json j;
    j["status"] = SP_INVALID_INPUT;
    j["error"] = "cannot write file: " + *path;
    std::cerr << j.dump() << "\n";
    std::exit(3);
  }
  out << content;
}

struct GlobalOptions {
  int threads = 1;
  std::uint64_t budget_counter = 0;
  std::uint64_t budget_enum = 0;
  std::uint64_t budget_matrix = 0;
  std::uint64_t budget_brute = 0;
  std::uint64_t budget_pairs = 0;
};

CtxPtr make_ctx(const GlobalOptions& opts) {
  CtxPtr ctx(sp_ctx_new());
  if (!ctx) {
    std::cerr << "{\"status\":4,\"error\":\"cannot allocate context\"}\n";
    std::exit(4);
  }
  if (sp_status s = sp_ctx_set_threads(ctx.get(), opts.threads); s != SP_OK) die(ctx.get(), s);
  auto apply = [&](sp_budget which, std::uint64_t value) {
    if (value == 0) return;
    if (sp_status s = sp_ctx_set_budget(ctx.get(), which, value); s != SP_OK) die(ctx.get(), s);
  };
  apply(SP_BUDGET_COUNTER_ENTRIES, opts.budget_counter);
  apply(SP_BUDGET_ENUMERATION, opts.budget_enum);
  apply(SP_BUDGET_MATRIX_DIM, opts.budget_matrix);
  apply(SP_BUDGET_BRUTE_FORCE, opts.budget_brute);
  apply(SP_BUDGET_PAIR_OPS, opts.budget_pairs);
  return ctx;
}

SetPtr load_set(sp_ctx* ctx, const std::string& path) {
  std::string text = read_file(path);
  sp_set* raw = nullptr;
  if (sp_status s = sp_set_parse(ctx, text.c_str(), &raw); s != SP_OK) die(ctx, s);
  return SetPtr(raw);
}

ordered_json family_json_from_flags(const std::string& kind, std::uint64_t m, std::uint64_t n_levels,
                                    const std::string& q, std::uint64_t n,
                                    const std::vector<std::uint64_t>& pool, unsigned k,
                                    std::int64_t e_max, std::uint64_t size, std::uint64_t seed,
                                    bool integer_mode) {
  ordered_json j;
  j["kind"] = kind;
  if (kind == "balog_wooley") {
    j["M"] = m;
    j["N"] = n_levels;
  } else if (kind == "geometric") {
    j["q"] = q;
    j["n"] = n;
  } else if (kind == "random_few_prime") {
    j["pool"] = pool;
    j["k"] = k;
    j["e_max"] = e_max;
    j["size"] = size;
    j["seed"] = seed;
    j["integer_mode"] = integer_mode;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumprod: exact sum-product growth laboratory"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--threads", opts.threads, "worker threads (outputs do not depend on this)");
  app.add_option("--budget-counter", opts.budget_counter, "max counter entries");
  app.add_option("--budget-enum", opts.budget_enum, "max boxed group slice size");
  app.add_option("--budget-matrix", opts.budget_matrix, "max cycle matrix dimension");
  app.add_option("--budget-brute", opts.budget_brute, "max brute-force tuples");
  app.add_option("--budget-pairs", opts.budget_pairs, "max quotient-graph probes");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a set file from a family spec");
  std::string gen_family_file, gen_kind, gen_q = "2";
  std::uint64_t gen_m = 8, gen_nlv = 4, gen_n = 10, gen_size = 40, gen_seed = 1;
  std::vector<std::uint64_t> gen_pool;
  unsigned gen_k = 2;
  std::int64_t gen_emax = 3;
  bool gen_int_mode = false;
  std::optional<std::string> gen_out;
  gen->add_option("--family", gen_family_file, "family spec JSON file");
  gen->add_option("--kind", gen_kind, "balog_wooley | geometric | random_few_prime");
  gen->add_option("--M", gen_m, "balog_wooley interval length");
  gen->add_option("--N", gen_nlv, "balog_wooley number of levels");
  gen->add_option("--q", gen_q, "geometric ratio (rational string)");
  gen->add_option("--n", gen_n, "geometric length");
  gen->add_option("--pool", gen_pool, "random_few_prime prime pool")->delimiter(',');
  gen->add_option("--k", gen_k, "random_few_prime max primes per element");
  gen->add_option("--e-max", gen_emax, "random_few_prime exponent cap");
  gen->add_option("--size", gen_size, "random_few_prime set size");
  gen->add_option("--seed", gen_seed, "random_few_prime seed");
  gen->add_flag("--integer", gen_int_mode, "integer mode (positive, exponents in [1, e_max])");
  gen->add_option("-o,--output", gen_out, "output path (default stdout)");

  // stats
  auto* stats = app.add_subcommand("stats", "exact growth statistics for a set file");
  std::string stats_set_file;
  std::vector<int> stats_ms{2};
  bool stats_no_header = false;
  std::optional<std::string> stats_out;
  stats->add_option("set", stats_set_file, "set file")->required();
  stats->add_option("-m", stats_ms, "iterated orders (repeatable)");
  stats->add_flag("--no-header", stats_no_header, "omit the CSV header row");
  stats->add_option("-o,--output", stats_out, "output path (default stdout)");

  // cover
  auto* cover = app.add_subcommand("cover", "covering certificate for A (and optional B)");
  std::string cover_a, cover_b;
  unsigned cover_k = 1, cover_l = 1;
  int cover_variant = 1;
  std::optional<std::string> cover_out;
  cover->add_option("a", cover_a, "set file for A")->required();
  cover->add_option("b", cover_b, "set file for B (defaults to A)");
  cover->add_option("--k", cover_k, "omega bound on A")->required();
  cover->add_option("--l", cover_l, "omega bound on B")->required();
  cover->add_option("--variant", cover_variant, "prime selection route (1 or 2)");
  cover->add_option("-o,--output", cover_out, "output path (default stdout)");

  // sunit
  auto* sunit = app.add_subcommand("sunit", "solution-count scan over a boxed group");
  std::string sunit_eq, sunit_group;
  std::vector<std::int64_t> sunit_hs;
  std::optional<std::string> sunit_out;
  sunit->add_option("--equation", sunit_eq, "equation spec JSON file")->required();
  sunit->add_option("--group", sunit_group, "group spec JSON file")->required();
  sunit->add_option("--H", sunit_hs, "exponent box bounds (repeatable)")->required();
  sunit->add_option("-o,--output", sunit_out, "output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a randomized check suite");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 1, verify_instances = 20, verify_max_size = 12;
  std::string verify_set_file;
  std::optional<std::string> verify_out;
  std::optional<std::string> verify_csv;
  verify->add_option("suite", verify_suite,
                     "holder | interpolation | popular | shkredov | asymmetric | "
                     "cauchy_schwarz | all");
  verify->add_option("--seed", verify_seed, "suite seed");
  verify->add_option("--instances", verify_instances, "randomized instances");
  verify->add_option("--max-size", verify_max_size, "max set size per instance");
  verify->add_option("--set", verify_set_file, "run the set-applicable checks on this file");
  verify->add_option("-o,--output", verify_out, "JSONL output path (default stdout)");
  verify->add_option("--csv", verify_csv, "also write a CSV summary here");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "exponent sweep over a family grid");
  std::string sweep_grid_file;
  std::optional<std::string> sweep_out;
  sweep->add_option("--grid", sweep_grid_file, "sweep grid JSON file")->required();
  sweep->add_option("-o,--output", sweep_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  CtxPtr ctx = make_ctx(opts);

  if (gen->parsed()) {
    std::string family_json;
    if (!gen_family_file.empty()) {
      family_json = read_file(gen_family_file);
    } else if (!gen_kind.empty()) {
      if (gen_kind == "random_few_prime" && gen_pool.empty()) gen_pool = {2, 3, 5, 7, 11};
      family_json = family_json_from_flags(gen_kind, gen_m, gen_nlv, gen_q, gen_n, gen_pool,
                                           gen_k, gen_emax, gen_size, gen_seed, gen_int_mode)
                        .dump();
    } else {
      std::cerr << "{\"status\":3,\"error\":\"gen needs --family or --kind\"}\n";
      return 3;
    }
    sp_set* raw = nullptr;
    if (sp_status s = sp_set_generate(ctx.get(), family_json.c_str(), &raw); s != SP_OK)
      die(ctx.get(), s);
    SetPtr set(raw);
    OwnedString out;
    if (sp_status s = sp_set_to_json(ctx.get(), set.get(), &out.data); s != SP_OK)
      die(ctx.get(), s);
    write_output(gen_out, out.str());
    return 0;
  }

  if (stats->parsed()) {
    SetPtr set = load_set(ctx.get(), stats_set_file);
    std::vector<std::int32_t> ms(stats_ms.begin(), stats_ms.end());
    OwnedString out;
    if (sp_status s = sp_stats_csv(ctx.get(), set.get(), ms.data(), ms.size(),
                                   stats_no_header ? 0 : 1, &out.data);
        s != SP_OK)
      die(ctx.get(), s);
    write_output(stats_out, out.str());
    return 0;
  }

  if (cover->parsed()) {
    SetPtr a = load_set(ctx.get(), cover_a);
    SetPtr b;
    if (!cover_b.empty()) b = load_set(ctx.get(), cover_b);
    OwnedString out;
    sp_status s = sp_cover(ctx.get(), a.get(), b.get(), static_cast<int32_t>(cover_k),
                           static_cast<int32_t>(cover_l), cover_variant, &out.data);
    if (s != SP_OK && s != SP_CHECK_FAILED) die(ctx.get(), s);
    write_output(cover_out, out.str());
    if (s == SP_CHECK_FAILED)
      std::cerr << "{\"status\":1,\"error\":\"certificate inequality failed\"}\n";
    return exit_code_of(s);
  }

  if (sunit->parsed()) {
    std::string eq = read_file(sunit_eq);
    std::string group = read_file(sunit_group);
    OwnedString out;
    if (sp_status s = sp_sunit_scan(ctx.get(), eq.c_str(), group.c_str(), sunit_hs.data(),
                                    sunit_hs.size(), &out.data);
        s != SP_OK)
      die(ctx.get(), s);
    std::string csv = out.str();
    write_output(sunit_out, csv);
    // Observation only: whether the last two scanned counts agree.
    std::vector<std::string> counts;
    std::istringstream ss(csv);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
      auto first = line.find(',');
      auto second = line.find(',', first + 1);
      if (first != std::string::npos && second != std::string::npos)
        counts.push_back(line.substr(first + 1, second - first - 1));
    }
    bool stabilized = counts.size() >= 2 && counts[counts.size() - 1] == counts[counts.size() - 2];
    ordered_json note;
    note["observation"] = "scan";
    note["stabilized_over_scanned_range"] = stabilized;
    std::cerr << note.dump() << "\n";
    return 0;
  }

  if (verify->parsed()) {
    OwnedString jsonl;
    OwnedString csv;
    sp_status s;
    if (!verify_set_file.empty()) {
      SetPtr set = load_set(ctx.get(), verify_set_file);
      s = sp_verify_set(ctx.get(), set.get(), &jsonl.data, verify_csv ? &csv.data : nullptr);
    } else {
      s = sp_verify(ctx.get(), verify_suite.c_str(), verify_seed, verify_instances,
                    verify_max_size, &jsonl.data, verify_csv ? &csv.data : nullptr);
    }
    if (s != SP_OK && s != SP_CHECK_FAILED) die(ctx.get(), s);
    write_output(verify_out, jsonl.str());
    if (verify_csv) write_output(verify_csv, csv.str());
    if (s == SP_CHECK_FAILED)
      std::cerr << "{\"status\":1,\"error\":\"a check reported holds=false\"}\n";
    return exit_code_of(s);
  }

  if (sweep->parsed()) {
    std::string grid = read_file(sweep_grid_file);
    OwnedString out;
    if (sp_status s = sp_sweep(ctx.get(), grid.c_str(), &out.data); s != SP_OK)
      die(ctx.get(), s);
    write_output(sweep_out, out.str());
    return 0;
  }

  return 3;
}
