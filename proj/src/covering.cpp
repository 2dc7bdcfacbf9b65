#include "covering.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"
#include "parallel.hpp"

namespace sumprod {

Check Check::make(std::string name, Rat lhs, Relation rel, Rat rhs) {
  bool ok = rel == Relation::le ? lhs <= rhs : rel == Relation::ge ? lhs >= rhs : lhs == rhs;
  return Check{std::move(name), std::move(lhs), rel, std::move(rhs), ok};
}

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "=";
  }
  return "?";
}

bool all_hold(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

namespace {

FiniteSet ensure_factored(const FiniteSet& s) {
  return s.has_factorizations() ? s : s.with_factorizations();
}

void require_omega_bound(const FiniteSet& s, unsigned bound, const char* side) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.factorization(i).omega() > bound)
      fail(Errc::hypothesis_violated, std::string("omega bound ") + std::to_string(bound) +
                                          " fails on " + side + " element " + s[i].str() +
                                          " (omega = " + std::to_string(s.factorization(i).omega()) + ")");
  }
}

// Support of each element with the primes of S removed.
std::vector<PrimeSet> outside_supports(const FiniteSet& s, const PrimeSet& sel) {
  std::vector<PrimeSet> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (auto& [p, e] : s.factorization(i).factors())
      if (!sel.count(p)) out[i].insert(p);
  }
  return out;
}

bool disjoint(const PrimeSet& x, const PrimeSet& y) {
  auto it = x.begin();
  auto jt = y.begin();
  while (it != x.end() && jt != y.end()) {
    if (*it < *jt) ++it;
    else if (*jt < *it) ++jt;
    else return false;
  }
  return true;
}

// #{(a,b) : P(a) and P(b) share primes only inside S}.
std::uint64_t good_pair_count(const FiniteSet& a, const FiniteSet& b, const PrimeSet& sel,
                              const Exec& ex) {
  std::vector<PrimeSet> ao = outside_supports(a, sel);
  std::vector<PrimeSet> bo = outside_supports(b, sel);
  auto locals = sharded<std::uint64_t>(
      a.size(), ex.threads, [&](std::size_t, std::size_t lo, std::size_t hi, std::uint64_t& out) {
        out = 0;
        for (std::size_t i = lo; i < hi; ++i)
          for (std::size_t j = 0; j < b.size(); ++j)
            if (disjoint(ao[i], bo[j])) ++out;
      });
  std::uint64_t total = 0;
  for (auto v : locals) total += v;
  return total;
}

std::map<std::uint64_t, std::size_t> divisor_counts(const FiniteSet& a) {
  std::map<std::uint64_t, std::size_t> counts;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto& [p, e] : a.factorization(i).factors()) ++counts[p];
  return counts;
}

Check good_pair_check(const FiniteSet& a, const FiniteSet& b, const PrimeSet& sel,
                      const Exec& ex) {
  std::uint64_t good = good_pair_count(a, b, sel, ex);
  Rat half = Rat(static_cast<long>(a.size())) * Rat(static_cast<long>(b.size())) / Rat(2);
  return Check::make("good_pair_mass_ge_half", Rat(mpz_class(good)), Relation::ge, half);
}

}  // namespace

PrimeSelection popular_primes(const FiniteSet& a_in, const FiniteSet& b_in, unsigned k, unsigned l,
                              const Exec& ex) {
  if (k < 1 || l < 1) fail(Errc::parameter, "omega bounds k, l must be >= 1");
  FiniteSet a = ensure_factored(a_in);
  FiniteSet b = ensure_factored(b_in);
  require_omega_bound(a, k, "A");
  require_omega_bound(b, l, "B");

  // p is popular when it divides at least |A| / (2l) elements of A.
  PrimeSet sel;
  for (auto& [p, cnt] : divisor_counts(a)) {
    if (mpz_class(static_cast<unsigned long>(cnt)) * (2 * l) >=
        mpz_class(static_cast<unsigned long>(a.size())))
      sel.insert(p);
  }

  PrimeSelection out;
  out.checks.push_back(Check::make("s_size_le_2kl", Rat(static_cast<long>(sel.size())),
                                   Relation::le, Rat(static_cast<long>(2 * k * l))));
  out.checks.push_back(good_pair_check(a, b, sel, ex));
  out.s = std::move(sel);
  return out;
}

GreedySelection greedy_prime_chain(const FiniteSet& a_in, const FiniteSet& b_in, unsigned k,
                                   unsigned l, const Exec& ex) {
  if (k < 1 || l < 1) fail(Errc::parameter, "omega bounds k, l must be >= 1");
  FiniteSet a = ensure_factored(a_in);
  FiniteSet b = ensure_factored(b_in);
  require_omega_bound(a, k, "A");
  require_omega_bound(b, l, "B");

  PrimeSet sel;
  FiniteSet current = a;
  while (true) {
    // Best new prime: highest divisor count in the surviving subset, then
    // smallest prime; qualifies when it covers a 1/(2l) share.
    std::uint64_t best_prime = 0;
    std::size_t best_count = 0;
    for (auto& [p, cnt] : divisor_counts(current)) {
      if (sel.count(p)) continue;
      if (mpz_class(static_cast<unsigned long>(cnt)) * (2 * l) <
          mpz_class(static_cast<unsigned long>(current.size())))
        continue;
      if (cnt > best_count || (cnt == best_count && best_prime != 0 && p < best_prime)) {
        best_count = cnt;
        best_prime = p;
      }
    }
    if (best_prime == 0) break;
    sel.insert(best_prime);
    std::vector<Rat> vs;
    std::vector<FactoredRational> fs;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current.factorization(i).valuation(best_prime) != 0) {
        vs.push_back(current[i]);
        fs.push_back(current.factorization(i));
      }
    }
    current = FiniteSet(std::move(vs), std::move(fs));
  }

  GreedySelection out;
  out.checks.push_back(Check::make("s_size_le_k", Rat(static_cast<long>(sel.size())),
                                   Relation::le, Rat(static_cast<long>(k))));
  // |A0| >= (2l)^{-|S|} |A|
  Rat bound = Rat(static_cast<long>(a.size())) /
              pow_rat(Rat(static_cast<long>(2 * l)), static_cast<long>(sel.size()));
  out.checks.push_back(Check::make("surviving_ge_chain_bound",
                                   Rat(static_cast<long>(current.size())), Relation::ge, bound));
  out.checks.push_back(good_pair_check(current, b, sel, ex));
  out.s = std::move(sel);
  out.surviving = std::move(current);
  return out;
}

std::vector<CosetClass> split_by_s_free_part(const FiniteSet& a_in, const PrimeSet& s) {
  FiniteSet a = ensure_factored(a_in);
  std::map<Rat, CosetClass> classes;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto split = a.factorization(i).split_support(s);
    Rat rep = split.outside.value();
    auto it = classes.find(rep);
    if (it == classes.end()) {
      it = classes.emplace(rep, CosetClass{rep, split.outside, {}}).first;
    }
    it->second.parts.push_back(split.inside.value());
  }
  std::vector<CosetClass> out;
  out.reserve(classes.size());
  for (auto& [rep, cls] : classes) {
    std::sort(cls.parts.begin(), cls.parts.end());
    out.push_back(std::move(cls));
  }
  return out;
}

CoveringCertificate covering_decomposition(const FiniteSet& a_in, const FiniteSet& b_in,
                                           const PrimeSet& s, unsigned k, unsigned l,
                                           const Exec& ex) {
  FiniteSet a = ensure_factored(a_in);
  FiniteSet b = ensure_factored(b_in);
  if (a.empty() || b.empty()) fail(Errc::invalid_input, "decomposition needs nonempty sets");

  Check hypothesis = good_pair_check(a, b, s, ex);
  if (!hypothesis.holds)
    fail(Errc::hypothesis_violated,
         "good-pair mass " + hypothesis.lhs.str() + " is below |A||B|/2 = " +
             hypothesis.rhs.str() + "; the decomposition guarantee does not apply");

  FiniteSet ab = product_set(a, b, ex);
  Rat size_a(static_cast<long>(a.size()));
  Rat size_b(static_cast<long>(b.size()));
  Rat size_ab(static_cast<long>(ab.size()));
  Rat threshold = size_a * size_b / (pow_rat(Rat(2), static_cast<long>(k + l + 2)) * size_ab);

  std::vector<CosetClass> classes = split_by_s_free_part(a, s);
  std::vector<CosetClass> kept;
  std::vector<Rat> surviving_values;
  std::vector<FactoredRational> surviving_factors;
  for (auto& cls : classes) {
    if (Rat(static_cast<long>(cls.parts.size())) >= threshold) {
      for (const Rat& part : cls.parts) {
        surviving_values.push_back(cls.rep * part);
      }
      kept.push_back(cls);
    }
  }
  // Recover factorizations of A' members from A (subset of a factored set).
  for (const Rat& v : surviving_values) {
    auto it = std::lower_bound(a.values().begin(), a.values().end(), v);
    surviving_factors.push_back(a.factorization(
        static_cast<std::size_t>(it - a.values().begin())));
  }

  CoveringCertificate cert;
  cert.k = k;
  cert.l = l;
  cert.s_primes.assign(s.begin(), s.end());
  cert.a_prime = FiniteSet(std::move(surviving_values), std::move(surviving_factors));
  std::vector<Rat> reps;
  reps.reserve(kept.size());
  for (auto& cls : kept) reps.push_back(cls.rep);
  cert.class_reps = FiniteSet(std::move(reps));
  cert.classes = std::move(kept);
  cert.threshold = threshold;
  cert.degenerate_threshold = threshold <= Rat(1);
  cert.base_size = a.size();
  cert.surviving_size = a.size();
  cert.cover_size = cert.class_reps.size();

  cert.checks.push_back(hypothesis);
  Rat classes_count(static_cast<long>(cert.cover_size));
  Rat a_prime_size(static_cast<long>(cert.a_prime.size()));
  cert.checks.push_back(Check::make("class_count_times_threshold_le_a_prime",
                                    classes_count * threshold, Relation::le, a_prime_size));
  cert.checks.push_back(Check::make(
      "class_count_le_cover_bound", classes_count, Relation::le,
      pow_rat(Rat(2), static_cast<long>(k + l + 2)) * size_ab / size_b));
  cert.checks.push_back(
      Check::make("a_prime_ge_quarter", a_prime_size * Rat(4), Relation::ge, size_a));

  // Element-wise coverage of A' by Q_S * C.
  CoverWitness cover = m_covered_check(cert.a_prime, s, cert.class_reps);
  cert.checks.push_back(Check::make("a_prime_covered",
                                    Rat(static_cast<long>(std::count_if(
                                        cover.witness.begin(), cover.witness.end(),
                                        [](const auto& w) { return w.has_value(); }))),
                                    Relation::eq, a_prime_size));
  return cert;
}

CoveringCertificate cover_pipeline(const FiniteSet& a, const FiniteSet& b, unsigned k, unsigned l,
                                   int variant, const Exec& ex) {
  if (variant != 1 && variant != 2) fail(Errc::parameter, "variant must be 1 or 2");
  if (variant == 1) {
    PrimeSelection sel = popular_primes(a, b, k, l, ex);
    CoveringCertificate cert = covering_decomposition(a, b, sel.s, k, l, ex);
    cert.variant = 1;
    cert.checks.insert(cert.checks.begin(), sel.checks.begin(), sel.checks.end());
    return cert;
  }
  GreedySelection sel = greedy_prime_chain(a, b, k, l, ex);
  CoveringCertificate cert = covering_decomposition(sel.surviving, b, sel.s, k, l, ex);
  cert.variant = 2;
  cert.base_size = a.size();
  cert.surviving_size = sel.surviving.size();
  // Overall variant-2 size guarantee: 4 (2l)^{|S|} |A'| >= |A|.
  Rat lhs = Rat(4) * pow_rat(Rat(static_cast<long>(2 * l)), static_cast<long>(sel.s.size())) *
            Rat(static_cast<long>(cert.a_prime.size()));
  cert.checks.insert(cert.checks.begin(), sel.checks.begin(), sel.checks.end());
  cert.checks.push_back(Check::make("a_prime_ge_variant2_bound", lhs, Relation::ge,
                                    Rat(static_cast<long>(a.size()))));
  return cert;
}

PigeonholeLevel pigeonhole_level(const FiniteSet& a, std::size_t m, const Exec& ex) {
  if (m < 2) fail(Errc::parameter, "pigeonhole level needs m >= 2");
  if (a.contains_zero()) fail(Errc::zero_element, "pigeonhole level requires 0-free A");
  if (a.empty()) fail(Errc::invalid_input, "pigeonhole level needs a nonempty set");

  PigeonholeLevel out;
  FiniteSet power = a;  // A^{(1)}
  Rat size_a(static_cast<long>(a.size()));
  std::optional<Rat> best;
  FiniteSet best_power;
  std::size_t best_level = 1;
  for (std::size_t i = 1; i < m; ++i) {
    FiniteSet next = product_set(a, power, ex);  // A^{(i+1)} = A * A^{(i)}
    Rat ratio = Rat(static_cast<long>(next.size())) / Rat(static_cast<long>(power.size()));
    out.all_ratios.push_back(ratio);
    if (!best || ratio < *best) {
      best = ratio;
      best_power = power;
      best_level = i;
    }
    power = std::move(next);
  }
  out.level = best_level;
  out.b = std::move(best_power);
  out.ratio = *best;
  // ratio^{m-1} <= |A^{(m)}| / |A|, exact.
  out.guarantee = Check::make("min_ratio_power_le_total_growth",
                              pow_rat(out.ratio, static_cast<long>(m - 1)) * size_a, Relation::le,
                              Rat(static_cast<long>(power.size())));
  return out;
}

CoverWitness m_covered_check(const FiniteSet& a_in, const PrimeSet& s, const FiniteSet& c_in) {
  FiniteSet a = a_in.empty() ? a_in : ensure_factored(a_in);
  FiniteSet c = c_in.empty() ? c_in : ensure_factored(c_in);
  CoverWitness out;
  out.witness.resize(a.size());

  // a = c * q with q in Q_S iff the S-free parts of a and c agree up to
  // sign (Q_S contains -1, so coverage is sign-insensitive).
  std::unordered_map<Rat, std::size_t, RatHash> rep_index;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rat key = c.factorization(j).split_support(s).outside.value().abs();
    rep_index.emplace(std::move(key), j);
  }
  out.covered = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat key = a.factorization(i).split_support(s).outside.value().abs();
    auto it = rep_index.find(key);
    if (it != rep_index.end()) {
      out.witness[i] = it->second;
    } else {
      out.covered = false;
      if (!out.first_uncovered) out.first_uncovered = a[i];
    }
  }
  return out;
}

}  // namespace sumprod
