#include "experiments.hpp"

#include <cmath>

#include "errors.hpp"
#include "io.hpp"

namespace sumprod {

SweepGrid sweep_grid_from_json_text(const std::string& text) {
  io::ordered_json j;
  try {
    j = io::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, std::string("malformed sweep grid: ") + e.what());
  }
  if (!j.is_object() || !j.contains("families") || !j["families"].is_array())
    fail(Errc::invalid_input, "sweep grid needs a \"families\" array");
  SweepGrid grid;
  if (j.contains("ms")) grid.ms = j["ms"].get<std::vector<unsigned>>();
  if (grid.ms.empty()) fail(Errc::invalid_input, "sweep grid needs a nonempty m list");
  for (const auto& fj : j["families"]) grid.families.push_back(io::family_from_json(fj));
  if (grid.families.empty()) fail(Errc::invalid_input, "sweep grid has no families");
  return grid;
}

namespace {

std::string log_ratio(std::uint64_t count, std::size_t n) {
  if (n <= 1 || count == 0) return "";
  return io::fmt_double(std::log(static_cast<double>(count)) / std::log(static_cast<double>(n)));
}

}  // namespace

std::string stats_csv_header(const std::vector<unsigned>& ms) {
  std::string h = "family,seed,n,sum,diff,prod,a_plus_aa";
  for (unsigned m : ms) h += ",isum_m" + std::to_string(m);
  for (unsigned m : ms) h += ",iprod_m" + std::to_string(m);
  h += ",lr_sum,lr_diff,lr_prod,lr_a_plus_aa";
  for (unsigned m : ms) h += ",lr_isum_m" + std::to_string(m);
  for (unsigned m : ms) h += ",lr_iprod_m" + std::to_string(m);
  h += ",lr_max_sum_prod,e4,lr_prod_energy_max,bw_prod_bound,bw_bound_holds\n";
  return h;
}

std::string stats_csv_row(const StatsRow& row, const FamilySpec& spec) {
  std::string out = spec.label();
  out += "," + std::to_string(spec.seed());
  out += "," + std::to_string(row.n);
  out += "," + std::to_string(row.sumset);
  out += "," + std::to_string(row.diffset);
  out += "," + std::to_string(row.prodset);
  out += "," + std::to_string(row.a_plus_aa_size);
  for (auto& [m, count] : row.iterated_sums) out += "," + std::to_string(count);
  for (auto& [m, count] : row.iterated_prods) out += "," + std::to_string(count);
  out += "," + log_ratio(row.sumset, row.n);
  out += "," + log_ratio(row.diffset, row.n);
  out += "," + log_ratio(row.prodset, row.n);
  out += "," + log_ratio(row.a_plus_aa_size, row.n);
  for (auto& [m, count] : row.iterated_sums) out += "," + log_ratio(count, row.n);
  for (auto& [m, count] : row.iterated_prods) out += "," + log_ratio(count, row.n);
  out += "," + log_ratio(std::max(row.sumset, row.prodset), row.n);
  out += "," + row.e4.get_str();
  // log(max(|AA|, |A|^4 / E(A))) / log n: the energy-form growth statistic.
  if (row.n > 1 && row.prodset > 0 && row.e4 > 0) {
    double log_n = std::log(static_cast<double>(row.n));
    double energy_term = 4.0 * log_n - log_mpz(row.e4);
    double lmax = std::max(std::log(static_cast<double>(row.prodset)), energy_term);
    out += "," + io::fmt_double(lmax / log_n);
  } else {
    out += ",";
  }
  if (spec.kind == FamilySpec::Kind::balog_wooley) {
    mpz_class bound = mpz_class(static_cast<unsigned long>(spec.m)) * spec.m *
                      (2 * static_cast<unsigned long>(spec.n_levels) - 1);
    bool holds = mpz_class(static_cast<unsigned long>(row.prodset)) <= bound;
    out += "," + bound.get_str() + (holds ? ",1" : ",0");
  } else {
    out += ",,";
  }
  out += "\n";
  return out;
}

std::string run_sweep(const SweepGrid& grid, const Exec& ex) {
  std::string out = stats_csv_header(grid.ms);
  for (const FamilySpec& spec : grid.families) {
    FiniteSet a = generate(spec);
    StatsRow row = report_exponents(a, grid.ms, ex);
    out += stats_csv_row(row, spec);
  }
  return out;
}

std::string stats_csv_for_set(const FiniteSet& a, const std::vector<unsigned>& ms,
                              const FamilySpec& spec, bool include_header, const Exec& ex) {
  std::string out = include_header ? stats_csv_header(ms) : std::string{};
  out += stats_csv_row(report_exponents(a, ms, ex), spec);
  return out;
}

}  // namespace sumprod
