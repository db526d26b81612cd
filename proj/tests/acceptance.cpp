// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "ilseq/construct_u.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/generators.hpp"
#include "ilseq/number_theory.hpp"
#include "ilseq/search.hpp"
#include "ilseq/verify.hpp"

using namespace ilseq;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::vector<std::int64_t> odd_primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 3; p <= limit; p += 2) {
    if (is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

bool is_residue(std::int64_t tau, const std::vector<std::int64_t>& qr) {
  return std::find(qr.begin(), qr.end(), tau) != qr.end();
}

// Expected table: ideal for p = 3 mod 4, otherwise the first kind is 1 on
// residues and -3 on non-residues and the second kind the reverse.
std::int64_t legendre_table(std::int64_t p, LegendreKind kind, std::int64_t tau,
                            const std::vector<std::int64_t>& qr) {
  if (tau == 0) return p;
  if (p % 4 == 3) return -1;
  const bool one_on_residues = kind == LegendreKind::First;
  return is_residue(tau, qr) == one_on_residues ? 1 : -3;
}

Outcome criterion1() {
  Outcome o;
  std::size_t checked = 0;
  std::size_t mismatched = 0;
  std::size_t exchanged = 0;
  std::string first_bad;
  for (auto p : odd_primes_up_to(101)) {
    const auto qr = quadratic_residues(p);
    for (auto kind : {LegendreKind::First, LegendreKind::Second}) {
      ++checked;
      const auto r = autocorrelation_spectrum(legendre(p, kind)).values;
      const auto other = kind == LegendreKind::First ? LegendreKind::Second : LegendreKind::First;
      bool match = true;
      bool match_other = true;
      for (std::int64_t tau = 0; tau < p; ++tau) {
        const auto v = r[static_cast<std::size_t>(tau)];
        match = match && v == legendre_table(p, kind, tau, qr);
        match_other = match_other && v == legendre_table(p, other, tau, qr);
      }
      if (!match) {
        ++mismatched;
        if (match_other) ++exchanged;
        if (first_bad.empty()) {
          first_bad = "p=" + std::to_string(p) + " " + std::string(to_string(kind));
        }
      }
    }
  }
  o.pass = mismatched == 0;
  o.detail = std::to_string(checked) + " spectra, " + std::to_string(mismatched) +
             " differ from the table";
  if (mismatched > 0) {
    o.detail += " (first: " + first_bad + "; " + std::to_string(exchanged) +
                " match the row of the other kind)";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t checked = 0;
  for (auto p : odd_primes_up_to(101)) {
    for (auto kind : {LegendreKind::First, LegendreKind::Second}) {
      ++checked;
      const auto expected = p % 4 == 1 ? Symmetry::Symmetric : Symmetry::Antisymmetric;
      if (symmetry_type(legendre(p, kind)) != expected) {
        o.pass = false;
        o.detail = "p=" + std::to_string(p) + " " + std::string(to_string(kind)) + " wrong; ";
      }
    }
  }
  o.detail += std::to_string(checked) + " sequences classified";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::size_t mismatches = 0;
  std::size_t rows = 0;
  for (int i = 0; i < 500; ++i) {
    const auto spec = random_spec(rng, 200);
    for (const auto& report : {verify_theorem1(spec), verify_theorem2(spec)}) {
      mismatches += report.mismatches();
      for (const auto& s : report.series) rows += s.observed.size();
    }
  }
  o.pass = mismatches == 0;
  o.detail = "500 specs, " + std::to_string(rows) + " predicted values, " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::ostringstream detail;
  for (std::int64_t p : {3, 5, 11, 17}) {
    const auto spec = twin_prime_array(p, false);
    const auto d = column_balances(spec);
    bool balanced = true;
    for (std::size_t i = 1; i < d.size(); ++i) balanced = balanced && d[i] == 1;
    const auto t = build(spec);
    const auto tp = build(twin_prime_array(p, true));
    const bool ideal = classify(autocorrelation_spectrum(t)).verdict == Verdict::Ideal;
    const auto levels = level_count(autocorrelation_spectrum(tp));
    const auto cross_ab = cross_correlation_spectrum(tp, t).values;
    const auto cross_ba = cross_correlation_spectrum(t, tp).values;
    const auto cross_levels = distinct_values(cross_ab).size();
    const bool ok = balanced && ideal && levels == 3 && cross_ab == cross_ba && cross_levels == 3;
    o.pass = o.pass && ok;
    detail << "p=" << p << (ok ? " ok" : " FAIL") << " [balances " << (balanced ? "1" : "bad")
           << ", ideal " << ideal << ", levels " << levels << ", cross equal "
           << (cross_ab == cross_ba) << ", cross values " << cross_levels << "] ";
  }
  o.detail = detail.str();
  o.detail.pop_back();
  return o;
}

InterleavedSpec odd_antisymmetric_spec(std::mt19937_64& rng) {
  while (true) {
    auto spec = random_antisymmetric_spec(rng, 105);
    if (spec.period() % 2 == 1) return spec;
  }
}

Outcome criterion5() {
  Outcome o;
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t readings = 0;
  std::size_t proof_index_wins = 0;
  std::size_t printed_index_wins = 0;
  const auto ms = m_sequence_array(4);
  for (std::int64_t eta = 0; eta <= 15; ++eta) {
    ++instances;
    mismatches += verify_theorem3(ms, eta, BalanceRegime::Constant).mismatches();
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto spec = odd_antisymmetric_spec(rng);
    for (std::int64_t eta = 0; eta <= 15; ++eta) {
      ++instances;
      const auto report = verify_theorem3(spec, eta, BalanceRegime::Antisymmetric);
      mismatches += report.mismatches();
      for (const auto& reading : report.index_readings) {
        if (reading.row != "mu2=1") continue;
        ++readings;
        if (reading.mismatches == 0) {
          (reading.index == OffsetIndex::Tau1Minus ? proof_index_wins : printed_index_wins)++;
        }
      }
    }
  }
  o.pass = mismatches == 0 && readings == 2 * 20 * 16;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(mismatches) +
             " mismatches; mu2=1 row matched by tau1_minus on " +
             std::to_string(proof_index_wins) + "/" + std::to_string(readings / 2) +
             ", by tau2_minus on " + std::to_string(printed_index_wins) + "/" +
             std::to_string(readings / 2);
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::ostringstream detail;
  const auto ms = m_sequence_array(4);
  std::size_t forward_fail = 0;
  for (std::int64_t eta = 0; eta < 15; ++eta) {
    if (!verify_theorem4(ms, eta, 1).passed()) ++forward_fail;
  }
  for (std::int64_t p : {7, 11, 19}) {
    const auto spec = embed_unit_columns(legendre(p, LegendreKind::Second));
    for (std::int64_t eta = 0; eta < p; ++eta) {
      if (!verify_theorem4(spec, eta, 2).passed()) ++forward_fail;
    }
  }
  const auto reverse = sample_theorem4_reverse(SamplingOptions{});
  o.pass = forward_fail == 0 && reverse.passed();
  detail << "forward instances failing: " << forward_fail << "; sampled violating specs: 200 (seed 1), "
         << reverse.findings.size() << " classify optimal";
  if (!reverse.findings.empty()) detail << " (first: " << reverse.findings.front().detail << ")";
  const auto known = embed_unit_columns(BinarySequence::from_string("0111010"));
  const auto known_verdict = classify(autocorrelation_spectrum(build_u(known, 2))).verdict;
  detail << "; outside the sample, s=0111010 eta=2 violates both conditions and u is "
         << to_string(known_verdict);
  o.detail = detail.str();
  return o;
}

Outcome criterion7() {
  Outcome o;
  SearchOptions options;
  options.cross_check = true;
  auto contains = [](const SearchResult& r, const BinarySequence& s) {
    const auto key = canonical_rotation(s);
    return std::find(r.representatives.begin(), r.representatives.end(), key) !=
           r.representatives.end();
  };
  const auto r5 = exhaustive_search(5, SearchTarget::Ideal, options);
  const auto r7 = exhaustive_search(7, SearchTarget::Ideal, options);
  const auto r15 = exhaustive_search(15, SearchTarget::Ideal, options);
  const bool n7 = contains(r7, legendre(7, LegendreKind::First)) &&
                  contains(r7, legendre(7, LegendreKind::Second));
  const bool n15 = contains(r15, m_sequence(4)) && contains(r15, twin_prime(3, false));
  const bool n5 = r5.representatives.empty();
  const auto disagreements =
      r5.oracle_disagreements + r7.oracle_disagreements + r15.oracle_disagreements;
  o.pass = n7 && n15 && n5 && disagreements == 0;
  o.detail = "N=7 Legendre " + std::string(n7 ? "found" : "missing") + ", N=15 m-sequence/twin-prime " +
             (n15 ? "found" : "missing") + " among " + std::to_string(r15.representatives.size()) +
             ", N=5 " + (n5 ? "empty" : "non-empty") + ", kernel/definition disagreements " +
             std::to_string(disagreements);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::vector<std::uint8_t> bits(4095);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  const BinarySequence s(bits);
  const auto start = Clock::now();
  const auto spectrum = autocorrelation_spectrum(s);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    const auto tau = static_cast<std::int64_t>(rng() % 4095);
    if (spectrum.values[static_cast<std::size_t>(tau)] != reference::cross_correlation(s, s, tau)) {
      ++bad;
    }
  }
  o.pass = seconds < 1.0 && bad == 0;
  char buf[96];
  std::snprintf(buf, sizeof buf, "period 4095 spectrum in %.4f s, %zu/100 sampled lags differ",
                seconds, bad);
  o.detail = buf;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "Legendre spectra", 1.0, criterion1},
      {2, "Legendre symmetry law", 1.0, criterion2},
      {3, "interleave correlation identities", 30.0, criterion3},
      {4, "twin-prime properties", 10.0, criterion4},
      {5, "period-4N autocorrelation sweep", 60.0, criterion5},
      {6, "period-4N optimality", 60.0, criterion6},
      {7, "exhaustive search closure", 120.0, criterion7},
      {8, "kernel performance", 1.0, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    auto outcome = c.run();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      outcome.pass = false;
      outcome.detail += "; over time limit";
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, outcome.pass ? "PASS" : "FAIL", c.name,
                seconds, outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
