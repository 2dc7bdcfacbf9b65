#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exec.hpp"
#include "families.hpp"
#include "verify.hpp"

namespace sumprod {

struct SweepGrid {
  std::vector<unsigned> ms = {2};    // iterated sum/product orders per row
  std::vector<FamilySpec> families;  // one CSV row per family
};

SweepGrid sweep_grid_from_json_text(const std::string& text);

std::string stats_csv_header(const std::vector<unsigned>& ms);

// One CSV row: exact counts, log-ratio columns log(count)/log(n), the
// log(max(|A+A|,|AA|))/log(n) column, and the multiplication-table bound
// M^2 (2N-1) check for balog_wooley families.
std::string stats_csv_row(const StatsRow& row, const FamilySpec& spec);

// Computes a row per family. Deterministic for a fixed grid, including
// across worker counts.
std::string run_sweep(const SweepGrid& grid, const Exec& ex = {});

// Stats for one already-built set (CLI `stats` on a file).
std::string stats_csv_for_set(const FiniteSet& a, const std::vector<unsigned>& ms,
                              const FamilySpec& spec, bool include_header, const Exec& ex = {});

}  // namespace sumprod
