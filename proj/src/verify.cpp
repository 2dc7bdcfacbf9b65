#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "errors.hpp"
#include "rng.hpp"

namespace sumprod {

namespace {

double log_rat(const Rat& r) {
  if (r.is_zero()) return -std::numeric_limits<double>::infinity();
  return log_mpz(r.num()) - log_mpz(r.den());
}

Rat rat_of(const mpz_class& z) { return Rat(z); }
Rat rat_of(std::size_t n) { return Rat(mpz_class(static_cast<unsigned long>(n))); }

}  // namespace

CheckReport make_report(std::string name, Rat lhs, Relation rel, Rat rhs,
                        std::map<std::string, std::string> context) {
  CheckReport rep;
  rep.name = std::move(name);
  rep.holds = rel == Relation::le ? lhs <= rhs : rel == Relation::ge ? lhs >= rhs : lhs == rhs;
  rep.lhs_log = log_rat(lhs);
  rep.rhs_log = log_rat(rhs);
  rep.lhs = std::move(lhs);
  rep.relation = rel;
  rep.rhs = std::move(rhs);
  rep.context = std::move(context);
  return rep;
}

bool all_hold(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.report_only || r.holds; });
}

CheckReport check_holder_energy(const FiniteSet& a, unsigned m, const Exec& ex) {
  if (m < 1) fail(Errc::parameter, "holder energy check needs m >= 1");
  Counter reps = iterated_convolve(a, m, ex);
  Rat lhs = rat_of(reps.support_size()) * rat_of(reps.sum_of_squares());
  Rat rhs = pow_rat(rat_of(a.size()), 2 * static_cast<long>(m));
  return make_report("holder_energy_m" + std::to_string(m), std::move(lhs), Relation::ge,
                     std::move(rhs), {{"m", std::to_string(m)}, {"n", std::to_string(a.size())}});
}

CheckReport check_energy_interpolation(const FiniteSet& a, const Rat& x,
                                       const std::vector<int>& signs, unsigned r, unsigned k,
                                       const Exec& ex) {
  const unsigned n = static_cast<unsigned>(signs.size());
  if (!(r >= 1 && 2 * r <= n && n <= 2 * k))
    fail(Errc::parameter, "interpolation needs k >= n/2 >= r >= 1");
  mpz_class count = signed_representation_count(a, x, signs, ex);
  std::map<std::string, std::string> ctx{{"n", std::to_string(n)},
                                         {"r", std::to_string(r)},
                                         {"k", std::to_string(k)},
                                         {"x", x.str()},
                                         {"count", count.get_str()}};
  if (k == r) {
    // Then n = 2k and the bound degenerates to count <= E_{2k}.
    mpz_class e2k = higher_energy(a, k, ex).value;
    return make_report("energy_interpolation", Rat(count), Relation::le, Rat(e2k),
                       std::move(ctx));
  }
  mpz_class e2r = higher_energy(a, r, ex).value;
  mpz_class e2k = higher_energy(a, k, ex).value;
  unsigned d = 2 * k - 2 * r;
  ctx["cleared_exponent"] = std::to_string(d);
  Rat lhs = pow_rat(Rat(count), d);
  Rat rhs = pow_rat(Rat(e2r), 2 * k - n) * pow_rat(Rat(e2k), n - 2 * r);
  return make_report("energy_interpolation", std::move(lhs), Relation::le, std::move(rhs),
                     std::move(ctx));
}

PopularSetResult popular_set(const FiniteSet& a, PopularSet::Mode mode, const Exec& ex) {
  if (a.empty()) fail(Errc::invalid_input, "popular set needs a nonempty A");
  const bool sums = mode == PopularSet::Mode::sums;
  Counter conv = sums ? convolve(a, a, ex) : co_convolve(a, a, ex);
  Rat size_a = rat_of(a.size());
  Rat support = rat_of(conv.support_size());
  Rat k_ratio = support / size_a;
  // Threshold |A| / (2K) = |A|^2 / (2 |A+-A|), exact.
  Rat threshold = size_a * size_a / (Rat(2) * support);

  std::vector<Rat> members;
  mpz_class mass = 0;
  for (auto& [key, mult] : conv.map()) {
    if (Rat(mult) >= threshold) {
      members.push_back(key);
      mass += mult;
    }
  }

  PopularSetResult out;
  out.set.mode = mode;
  out.set.c = FiniteSet(std::move(members));
  out.set.k_ratio = k_ratio;
  out.set.mass = mass;

  const char* tag = sums ? "sums" : "differences";
  std::map<std::string, std::string> ctx{{"mode", tag}, {"K", k_ratio.str()}};
  out.checks.push_back(make_report("popular_mass_ge_half", Rat(mass), Relation::ge,
                                   size_a * size_a / Rat(2), ctx));
  out.checks.push_back(make_report("popular_size_le_K_times_A", rat_of(out.set.c.size()),
                                   Relation::le, k_ratio * size_a, ctx));
  // Pointwise domination consequence at l = 2:
  // E_4(C) <= (2K)^4 |A|^{-4} E_8(A), exact.
  mpz_class e4c = higher_energy(out.set.c, 2, ex).value;
  mpz_class e8a = higher_energy(a, 4, ex).value;
  Rat rhs = pow_rat(Rat(2) * k_ratio, 4) / pow_rat(size_a, 4) * Rat(e8a);
  out.checks.push_back(
      make_report("popular_energy_domination_l2", Rat(e4c), Relation::le, std::move(rhs), ctx));
  return out;
}

std::vector<CheckReport> check_shkredov_steps(const FiniteSet& a, const FiniteSet& b,
                                              const FiniteSet& c, unsigned k, const Exec& ex) {
  if (k < 1) fail(Errc::parameter, "cycle steps need k >= 1");
  Counter conv = convolve(a, b, ex);
  mpz_class mass = 0;
  for (const Rat& v : c.values()) mass += conv.at(v);

  mpz_class cycles = cycle_homomorphism_count(a, b, c, k, ex);
  mpz_class e2kc = higher_energy(c, k, ex).value;

  Counter co_a = co_convolve(a, a, ex);
  Counter co_b = co_convolve(b, b, ex);
  mpz_class cross_moment = 0;
  const auto& small = co_a.support_size() <= co_b.support_size() ? co_a : co_b;
  const auto& large = co_a.support_size() <= co_b.support_size() ? co_b : co_a;
  for (auto& [key, mult] : small.map()) {
    if (key.is_zero()) continue;
    mpz_class other = large.at(key);
    if (other != 0) cross_moment += pow_mpz(mult, k) * pow_mpz(other, k);
  }

  std::map<std::string, std::string> ctx{{"k", std::to_string(k)},
                                         {"mass", mass.get_str()},
                                         {"V", cycles.get_str()}};
  std::vector<CheckReport> out;
  // Sidorenko for even cycles: V_{2k} (|A||B|)^k >= mass^{2k}.
  Rat ab = rat_of(a.size()) * rat_of(b.size());
  out.push_back(make_report("sidorenko_cycle_lower_bound", Rat(cycles) * pow_rat(ab, k),
                            Relation::ge, pow_rat(Rat(mass), 2 * static_cast<long>(k)), ctx));
  // Cauchy-Schwarz over cycle halves: V^2 <= E_{2k}(C) (V + cross moment).
  out.push_back(make_report("cycle_cauchy_schwarz", Rat(mpz_class(cycles * cycles)), Relation::le,
                            Rat(e2kc) * (Rat(cycles) + Rat(cross_moment)), ctx));
  // Combined form; its absolute constant is symbolic, so record only.
  CheckReport combined = make_report(
      "combined_energy_form", pow_rat(Rat(mass), 4 * static_cast<long>(k)), Relation::le,
      pow_rat(ab, 2 * static_cast<long>(k)) * Rat(e2kc) * (Rat(e2kc) + Rat(cross_moment)), ctx);
  combined.report_only = true;
  out.push_back(std::move(combined));
  return out;
}

CheckReport check_asymmetric_energy(const FiniteSet& a, const FiniteSet& b, unsigned m, unsigned n,
                                    const Exec& ex) {
  if (m < 2 || n < 2) fail(Errc::parameter, "asymmetric energy check needs m, n >= 2");
  mpz_class e_ab = additive_energy(a, b, ex).value;
  mpz_class e2m_a = higher_energy(a, m, ex).value;
  mpz_class e2n_b = higher_energy(b, n, ex).value;
  unsigned d = m * (n - 1);
  Rat lhs = pow_rat(Rat(e_ab), d);
  Rat rhs = pow_rat(Rat(e2m_a), n - 1) * Rat(e2n_b) * pow_rat(rat_of(b.size()), d - n);
  return make_report("asymmetric_energy_m" + std::to_string(m) + "_n" + std::to_string(n),
                     std::move(lhs), Relation::le, std::move(rhs),
                     {{"m", std::to_string(m)},
                      {"n", std::to_string(n)},
                      {"cleared_exponent", std::to_string(d)}});
}

CheckReport check_cauchy_schwarz_sumset(const FiniteSet& a, const FiniteSet& b, const Exec& ex) {
  Counter conv = convolve(a, b, ex);
  mpz_class e_ab = additive_energy(a, b, ex).value;
  Rat lhs = rat_of(conv.support_size()) * Rat(e_ab);
  Rat rhs = pow_rat(rat_of(a.size()), 2) * pow_rat(rat_of(b.size()), 2);
  return make_report("cauchy_schwarz_sumset", std::move(lhs), Relation::ge, std::move(rhs),
                     {{"sumset", std::to_string(conv.support_size())}});
}

StatsRow report_exponents(const FiniteSet& a, const std::vector<unsigned>& ms, const Exec& ex) {
  if (a.contains_zero())
    fail(Errc::zero_element, "exponent row needs a 0-free set for the multiplicative columns");
  StatsRow row;
  row.n = a.size();
  row.sumset = sumset(a, a, ex).size();
  row.diffset = difference_set(a, a, ex).size();
  row.e4 = additive_energy(a, a, ex).value;
  FiniteSet aa = product_set(a, a, ex);
  row.prodset = aa.size();
  row.a_plus_aa_size = sumset(a, aa, ex).size();
  for (unsigned m : ms) {
    if (m < 1) fail(Errc::parameter, "stats m-list entries must be >= 1");
    row.iterated_sums.emplace_back(m, iterated_sumset(a, m, ex).size());
    row.iterated_prods.emplace_back(m, iterated_product(a, m, ex).size());
  }
  return row;
}

namespace {

// Random nonzero rationals with small numerators/denominators; dedup to the
// requested size. 0 stays out so multiplicative checks remain applicable.
FiniteSet random_rat_set(Rng& rng, std::size_t size) {
  std::vector<Rat> vals;
  std::unordered_set<Rat, RatHash> seen;
  while (vals.size() < size) {
    long num = static_cast<long>(rng.range(-60, 60));
    if (num == 0) continue;
    long den = static_cast<long>(rng.range(1, 8));
    Rat v{mpz_class(num), mpz_class(den)};
    if (seen.insert(v).second) vals.push_back(v);
  }
  return FiniteSet(std::move(vals));
}

std::vector<int> random_signs(Rng& rng, unsigned n) {
  std::vector<int> signs(n);
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return signs;
}

Rat random_target(Rng& rng, const FiniteSet& a, const std::vector<int>& signs) {
  // Half the time an achievable value (the signed sum of a random tuple),
  // otherwise an arbitrary small rational (often giving count zero).
  if (rng.coin() && !a.empty()) {
    Rat s(0);
    for (int sign : signs) {
      const Rat& v = a[static_cast<std::size_t>(rng.below(a.size()))];
      s += sign == 1 ? v : -v;
    }
    return s;
  }
  return Rat(mpz_class(static_cast<long>(rng.range(-40, 40))),
             mpz_class(static_cast<long>(rng.range(1, 6))));
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& config,
                                   const Exec& ex) {
  const bool want_all = name == "all";
  auto wants = [&](const char* suite) { return want_all || name == suite; };
  if (!want_all && name != "holder" && name != "interpolation" && name != "popular" &&
      name != "shkredov" && name != "asymmetric" && name != "cauchy_schwarz")
    fail(Errc::invalid_input, "unknown verify suite: " + name);
  if (config.max_size < 4) fail(Errc::parameter, "suite max_size must be >= 4");

  Rng rng(config.seed);
  std::vector<CheckReport> out;
  for (std::size_t i = 0; i < config.instances; ++i) {
    std::size_t size_a = 4 + rng.below(config.max_size - 3);
    std::size_t size_b = 4 + rng.below(config.max_size - 3);
    FiniteSet a = random_rat_set(rng, size_a);
    FiniteSet b = random_rat_set(rng, size_b);

    if (wants("holder")) {
      append(out, {check_holder_energy(a, 2, ex)});
      append(out, {check_holder_energy(a, 3, ex)});
    }
    if (wants("interpolation")) {
      for (int t = 0; t < 10; ++t) {
        unsigned n = 2 + static_cast<unsigned>(rng.below(5));  // 2..6
        unsigned k = (n + 1) / 2 + static_cast<unsigned>(rng.below(2));
        if (2 * k < n) k = (n + 1) / 2;
        if (k > 3) k = 3;
        if (2 * k < n) n = 2 * k;
        unsigned r = 1 + static_cast<unsigned>(rng.below(n / 2));
        std::vector<int> signs = random_signs(rng, n);
        Rat x = random_target(rng, a, signs);
        append(out, {check_energy_interpolation(a, x, signs, r, k, ex)});
      }
    }
    if (wants("popular")) {
      append(out, popular_set(a, PopularSet::Mode::sums, ex).checks);
      append(out, popular_set(a, PopularSet::Mode::differences, ex).checks);
    }
    if (wants("shkredov")) {
      // C: a random subset of A+B, occasionally salted with outside values.
      FiniteSet ab = sumset(a, b, ex);
      std::vector<Rat> cvals;
      for (const Rat& v : ab.values())
        if (rng.below(3) != 0) cvals.push_back(v);
      if (rng.coin()) cvals.push_back(Rat(mpz_class(static_cast<long>(rng.range(300, 400)))));
      if (cvals.empty()) cvals.push_back(ab[0]);
      append(out, check_shkredov_steps(a, b, FiniteSet(std::move(cvals)), 2, ex));
    }
    if (wants("asymmetric")) {
      append(out, {check_asymmetric_energy(a, b, 2, 2, ex)});
      append(out, {check_asymmetric_energy(a, b, 3, 2, ex)});
      append(out, {check_asymmetric_energy(a, b, 2, 3, ex)});
    }
    if (wants("cauchy_schwarz")) {
      append(out, {check_cauchy_schwarz_sumset(a, b, ex)});
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].context["suite"] = name;
    out[i].context["seed"] = std::to_string(config.seed);
  }
  return out;
}

std::vector<CheckReport> checks_for_set(const FiniteSet& a, const Exec& ex) {
  std::vector<CheckReport> out;
  append(out, {check_holder_energy(a, 2, ex)});
  append(out, {check_holder_energy(a, 3, ex)});
  append(out, popular_set(a, PopularSet::Mode::sums, ex).checks);
  append(out, popular_set(a, PopularSet::Mode::differences, ex).checks);
  append(out, {check_cauchy_schwarz_sumset(a, a, ex)});
  return out;
}

}  // namespace sumprod
