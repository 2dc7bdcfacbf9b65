#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "counter.hpp"
#include "covering.hpp"
#include "families.hpp"
#include "finite_set.hpp"
#include "sunit.hpp"
#include "verify.hpp"

namespace sumprod::io {

using ordered_json = nlohmann::ordered_json;

// Canonical element forms: {"sign":..,"factors":{..}} when a factorization
// is attached, else {"int":"n"} / {"rat":"n/d"}. Factor keys ascend.
ordered_json element_to_json(const Rat& value, const FactoredRational* factorization);

// Accepts the three element forms; "int"/"rat" are factored on ingestion
// (an unfactorable "int" is an error, an unfactorable "rat" stays raw).
struct ParsedElement {
  Rat value;
  std::optional<FactoredRational> factorization;
};
ParsedElement element_from_json(const ordered_json& j, std::uint64_t factor_bound = 1'000'000);

ordered_json set_to_json(const FiniteSet& s);
// Full set file: {"elements":[...]} plus family/seed metadata when known.
std::string set_file_json(const FiniteSet& s, const std::optional<FamilySpec>& family);
// Accepts a bare element array or an object carrying "elements".
FiniteSet set_from_json(const std::string& text, std::uint64_t factor_bound = 1'000'000);

ordered_json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const ordered_json& j);
FamilySpec family_from_json_text(const std::string& text);

EquationInstance equation_from_json_text(const std::string& text);
GroupSpec group_from_json_text(const std::string& text);

std::string certificate_to_json(const CoveringCertificate& cert);

ordered_json report_to_json(const CheckReport& report);
std::string reports_to_jsonl(const std::vector<CheckReport>& reports);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

// Columns: value,multiplicity in ascending value order.
std::string counter_to_csv(const Counter& counter);

// Columns: H,nondegenerate_count,degenerate_count.
std::string scan_to_csv(const StabilizationScan& scan);

// Deterministic double formatting shared by every CSV writer.
std::string fmt_double(double v);

}  // namespace sumprod::io
