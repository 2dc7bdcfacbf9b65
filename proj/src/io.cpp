#include "io.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace sumprod::io {

namespace {

ordered_json parse_json(const std::string& text, const char* what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_input, std::string("malformed ") + what + ": " + e.what());
  }
}

mpz_class mpz_from_json(const ordered_json& j, const char* what) {
  try {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  } catch (const std::invalid_argument&) {
  }
  fail(Errc::invalid_input, std::string("expected an integer for ") + what);
}

}  // namespace

ordered_json element_to_json(const Rat& value, const FactoredRational* factorization) {
  ordered_json j;
  if (factorization != nullptr) {
    j["sign"] = factorization->sign();
    ordered_json factors = ordered_json::object();
    for (auto& [p, e] : factorization->factors()) factors[std::to_string(p)] = e;
    j["factors"] = std::move(factors);
    return j;
  }
  if (value.is_integer()) {
    j["int"] = value.str();
  } else {
    j["rat"] = value.str();
  }
  return j;
}

ParsedElement element_from_json(const ordered_json& j, std::uint64_t factor_bound) {
  if (!j.is_object()) fail(Errc::invalid_input, "set element must be a JSON object");
  if (j.contains("sign") || j.contains("factors")) {
    if (!j.contains("sign") || !j.contains("factors"))
      fail(Errc::invalid_input, "factored element needs both sign and factors");
    int sign = 0;
    if (j["sign"].is_number_integer()) sign = j["sign"].get<int>();
    if (sign != 1 && sign != -1) fail(Errc::invalid_input, "element sign must be 1 or -1");
    if (!j["factors"].is_object()) fail(Errc::invalid_input, "factors must be an object");
    std::map<std::uint64_t, std::int64_t> factors;
    for (auto& [key, val] : j["factors"].items()) {
      std::uint64_t p = 0;
      try {
        std::size_t pos = 0;
        p = std::stoull(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(Errc::invalid_input, "factor key is not an integer: '" + key + "'");
      }
      if (!val.is_number_integer())
        fail(Errc::invalid_input, "factor exponent must be an integer for prime " + key);
      auto e = val.get<std::int64_t>();
      if (factors.count(p)) fail(Errc::invalid_input, "duplicate prime key " + key);
      factors[p] = e;
    }
    FactoredRational f(sign, std::move(factors));  // validates primality, nonzero exps
    return ParsedElement{f.value(), std::move(f)};
  }
  if (j.contains("int")) {
    mpz_class n = mpz_from_json(j["int"], "\"int\" element");
    if (n == 0) return ParsedElement{Rat(0), std::nullopt};  // 0 has no factored form
    FactoredRational f = factor(n, factor_bound);
    return ParsedElement{f.value(), std::move(f)};
  }
  if (j.contains("rat")) {
    if (!j["rat"].is_string()) fail(Errc::invalid_input, "\"rat\" element must be a string");
    Rat v = Rat::parse(j["rat"].get<std::string>());
    if (v.is_zero()) return ParsedElement{v, std::nullopt};
    try {
      FactoredRational f = factor(v, factor_bound);
      return ParsedElement{v, std::move(f)};
    } catch (const Error& e) {
      if (e.kind() != Errc::unfactored_residue) throw;
      return ParsedElement{v, std::nullopt};
    }
  }
  fail(Errc::invalid_input, "element must carry sign/factors, int, or rat");
}

ordered_json set_to_json(const FiniteSet& s) {
  ordered_json elements = ordered_json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const FactoredRational* f = s.has_factorizations() ? &s.factorization(i) : nullptr;
    elements.push_back(element_to_json(s[i], f));
  }
  return elements;
}

std::string set_file_json(const FiniteSet& s, const std::optional<FamilySpec>& family) {
  ordered_json j;
  j["elements"] = set_to_json(s);
  if (family) {
    j["family"] = family_to_json(*family);
    j["seed"] = family->seed();
  } else {
    j["seed"] = 0;
  }
  return j.dump(2) + "\n";
}

FiniteSet set_from_json(const std::string& text, std::uint64_t factor_bound) {
  ordered_json j = parse_json(text, "set file");
  const ordered_json* elements = nullptr;
  if (j.is_array()) {
    elements = &j;
  } else if (j.is_object() && j.contains("elements") && j["elements"].is_array()) {
    elements = &j["elements"];
  } else {
    fail(Errc::invalid_input, "set file must be an element array or {\"elements\": [...]}");
  }
  std::vector<Rat> values;
  std::vector<FactoredRational> factors;
  bool all_factored = true;
  for (const auto& ej : *elements) {
    ParsedElement el = element_from_json(ej, factor_bound);
    values.push_back(std::move(el.value));
    if (el.factorization && all_factored) {
      factors.push_back(std::move(*el.factorization));
    } else {
      all_factored = false;
    }
  }
  if (all_factored && !values.empty()) return FiniteSet(std::move(values), std::move(factors));
  return FiniteSet(std::move(values));
}

ordered_json family_to_json(const FamilySpec& spec) {
  ordered_json j;
  switch (spec.kind) {
    case FamilySpec::Kind::balog_wooley:
      j["kind"] = "balog_wooley";
      j["M"] = spec.m;
      j["N"] = spec.n_levels;
      break;
    case FamilySpec::Kind::geometric:
      j["kind"] = "geometric";
      j["q"] = spec.q.str();
      j["n"] = spec.n;
      break;
    case FamilySpec::Kind::random_few_prime:
      j["kind"] = "random_few_prime";
      j["pool"] = spec.random.pool;
      j["k"] = spec.random.k;
      j["e_max"] = spec.random.e_max;
      j["size"] = spec.random.size;
      j["seed"] = spec.random.seed;
      j["integer_mode"] = spec.random.integer_mode;
      break;
    case FamilySpec::Kind::explicit_set: {
      j["kind"] = "explicit";
      ordered_json elements = ordered_json::array();
      for (const Rat& v : spec.elements) elements.push_back(element_to_json(v, nullptr));
      j["elements"] = std::move(elements);
      break;
    }
  }
  return j;
}

FamilySpec family_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Errc::invalid_input, "family spec needs a string \"kind\"");
  std::string kind = j["kind"].get<std::string>();
  FamilySpec spec;
  auto require = [&](const char* key) -> const ordered_json& {
    if (!j.contains(key))
      fail(Errc::invalid_input, "family spec missing \"" + std::string(key) + "\"");
    return j.at(key);
  };
  if (kind == "balog_wooley") {
    spec.kind = FamilySpec::Kind::balog_wooley;
    spec.m = require("M").get<std::uint64_t>();
    spec.n_levels = require("N").get<std::uint64_t>();
  } else if (kind == "geometric") {
    spec.kind = FamilySpec::Kind::geometric;
    const auto& q = require("q");
    spec.q = q.is_string() ? Rat::parse(q.get<std::string>()) : Rat(mpz_from_json(q, "q"));
    spec.n = require("n").get<std::uint64_t>();
  } else if (kind == "random_few_prime") {
    spec.kind = FamilySpec::Kind::random_few_prime;
    spec.random.pool = require("pool").get<std::vector<std::uint64_t>>();
    spec.random.k = require("k").get<unsigned>();
    spec.random.e_max = require("e_max").get<std::int64_t>();
    spec.random.size = require("size").get<std::size_t>();
    spec.random.seed = require("seed").get<std::uint64_t>();
    spec.random.integer_mode = j.value("integer_mode", false);
  } else if (kind == "explicit") {
    spec.kind = FamilySpec::Kind::explicit_set;
    const auto& elements = require("elements");
    if (!elements.is_array()) fail(Errc::invalid_input, "explicit family needs an element array");
    for (const auto& ej : elements) spec.elements.push_back(element_from_json(ej).value);
  } else {
    fail(Errc::invalid_input, "unknown family kind: " + kind);
  }
  return spec;
}

FamilySpec family_from_json_text(const std::string& text) {
  return family_from_json(parse_json(text, "family spec"));
}

EquationInstance equation_from_json_text(const std::string& text) {
  ordered_json j = parse_json(text, "equation spec");
  if (!j.is_object() || !j.contains("a0") || !j.contains("coeffs"))
    fail(Errc::invalid_input, "equation spec needs a0 and coeffs");
  auto rat_field = [](const ordered_json& v, const char* what) {
    if (v.is_string()) return Rat::parse(v.get<std::string>());
    return Rat(mpz_from_json(v, what));
  };
  Rat a0 = rat_field(j["a0"], "a0");
  if (!j["coeffs"].is_array()) fail(Errc::invalid_input, "coeffs must be an array");
  std::vector<Rat> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(rat_field(c, "coefficient"));
  return EquationInstance(std::move(a0), std::move(coeffs));
}

GroupSpec group_from_json_text(const std::string& text) {
  ordered_json j = parse_json(text, "group spec");
  if (!j.is_object() || !j.contains("generators"))
    fail(Errc::invalid_input, "group spec needs generators");
  if (!j["generators"].is_array()) fail(Errc::invalid_input, "generators must be an array");
  std::vector<FactoredRational> generators;
  for (const auto& gj : j["generators"]) {
    ParsedElement el = element_from_json(gj);
    if (!el.factorization)
      fail(Errc::invalid_input, "group generators must be factorable: " + el.value.str());
    generators.push_back(std::move(*el.factorization));
  }
  bool torsion = j.value("torsion", true);
  return GroupSpec(std::move(generators), torsion);
}

namespace {

ordered_json check_to_json(const Check& c) {
  ordered_json j;
  j["name"] = c.name;
  j["lhs"] = c.lhs.str();
  j["relation"] = relation_symbol(c.relation);
  j["rhs"] = c.rhs.str();
  j["holds"] = c.holds;
  return j;
}

}  // namespace

std::string certificate_to_json(const CoveringCertificate& cert) {
  ordered_json j;
  j["kind"] = "covering_certificate";
  j["variant"] = cert.variant;
  j["k"] = cert.k;
  j["l"] = cert.l;
  j["S"] = cert.s_primes;
  j["threshold"] = cert.threshold.str();
  j["degenerate_threshold"] = cert.degenerate_threshold;
  j["base_size"] = cert.base_size;
  j["surviving_size"] = cert.surviving_size;
  j["cover_size"] = cert.cover_size;
  j["A_prime"] = set_to_json(cert.a_prime);
  j["C"] = set_to_json(cert.class_reps);
  ordered_json classes = ordered_json::array();
  for (const auto& cls : cert.classes) {
    ordered_json cj;
    cj["rep"] = cls.rep.str();
    ordered_json parts = ordered_json::array();
    for (const Rat& part : cls.parts) parts.push_back(part.str());
    cj["parts"] = std::move(parts);
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  ordered_json checks = ordered_json::array();
  for (const Check& c : cert.checks) checks.push_back(check_to_json(c));
  j["checks"] = std::move(checks);
  j["all_hold"] = cert.all_hold();
  return j.dump(2) + "\n";
}

ordered_json report_to_json(const CheckReport& report) {
  ordered_json j;
  j["name"] = report.name;
  j["holds"] = report.holds;
  j["report_only"] = report.report_only;
  j["lhs"] = report.lhs.str();
  j["relation"] = relation_symbol(report.relation);
  j["rhs"] = report.rhs.str();
  if (std::isfinite(report.lhs_log)) j["lhs_log"] = report.lhs_log;
  else j["lhs_log"] = nullptr;
  if (std::isfinite(report.rhs_log)) j["rhs_log"] = report.rhs_log;
  else j["rhs_log"] = nullptr;
  ordered_json ctx = ordered_json::object();
  for (auto& [k, v] : report.context) ctx[k] = v;
  j["context"] = std::move(ctx);
  return j;
}

std::string reports_to_jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const CheckReport& r : reports) {
    out += report_to_json(r).dump();
    out += "\n";
  }
  return out;
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = "name,holds,report_only,lhs,relation,rhs,params\n";
  for (const CheckReport& r : reports) {
    std::string params;
    for (auto& [k, v] : r.context) {
      if (!params.empty()) params += ';';
      params += k + "=" + v;
    }
    out += r.name;
    out += r.holds ? ",1" : ",0";
    out += r.report_only ? ",1" : ",0";
    out += "," + r.lhs.str();
    out += ",";
    out += relation_symbol(r.relation);
    out += "," + r.rhs.str();
    out += "," + params + "\n";
  }
  return out;
}

std::string counter_to_csv(const Counter& counter) {
  std::string out = "value,multiplicity\n";
  for (auto& [key, mult] : counter.sorted_entries())
    out += key.str() + "," + mult.get_str() + "\n";
  return out;
}

std::string scan_to_csv(const StabilizationScan& scan) {
  std::string out = "H,nondegenerate_count,degenerate_count\n";
  for (const ScanPoint& p : scan.points)
    out += std::to_string(p.h) + "," + p.nondegenerate.get_str() + "," + p.degenerate.get_str() +
           "\n";
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace sumprod::io
