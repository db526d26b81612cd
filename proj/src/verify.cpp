#include "ilseq/verify.hpp"

#include <algorithm>
#include <sstream>

namespace ilseq {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

std::vector<std::size_t> Series::mismatched_shifts() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] != observed[i]) out.push_back(i);
  }
  return out;
}

std::size_t TheoremReport::mismatches() const {
  std::size_t total = 0;
  for (const auto& s : series) total += s.mismatched_shifts().size();
  for (const auto& f : findings) total += f.status == Status::Fail ? 1 : 0;
  return total;
}

std::size_t level_count(const CorrelationSpectrum& spectrum) {
  return distinct_values(spectrum.values).size();
}

namespace {

std::string join(std::span<const std::int64_t> values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

bool is_ideal(const CorrelationSpectrum& spectrum) {
  return classify(spectrum).verdict == Verdict::Ideal;
}

void add_shape(TheoremReport& r, const InterleavedSpec& spec) {
  r.parameters.emplace_back("K", static_cast<std::int64_t>(spec.rows()));
  r.parameters.emplace_back("T", static_cast<std::int64_t>(spec.columns_count()));
}

Finding biconditional(std::string name, bool left, bool right, std::string what) {
  Finding f{std::move(name), left == right ? Status::Pass : Status::Fail, {}};
  f.detail = what + ": left side " + (left ? "holds" : "fails") + ", right side " +
             (right ? "holds" : "fails");
  return f;
}

// Measured spectra of the pair (s, s') and the balances of the shared columns.
struct Pair {
  CorrelationSpectrum rs, rsp, rssp, rsps;
  std::vector<std::int64_t> d;
  std::int64_t K = 0, T = 0;
};

Pair measure(const InterleavedSpec& spec, bool s_is_b) {
  const auto a = build(with_constant_column(spec, s_is_b));
  const auto b = build(with_constant_column(spec, !s_is_b));
  Pair p;
  p.rs = autocorrelation_spectrum(a);
  p.rsp = autocorrelation_spectrum(b);
  p.rssp = cross_correlation_spectrum(a, b);
  p.rsps = cross_correlation_spectrum(b, a);
  p.d = column_balances(spec);
  p.K = static_cast<std::int64_t>(spec.rows());
  p.T = static_cast<std::int64_t>(spec.columns_count());
  return p;
}

// sign = +1 for s in Construction A, -1 for s in Construction B.
TheoremReport verify_pair(const InterleavedSpec& spec, std::string name, int sign) {
  const auto p = measure(spec, sign < 0);
  const std::size_t n = spec.period();
  const std::size_t T = spec.columns_count();
  Series auto_sp{"R_s'", CorrelationKind::Auto, std::vector<std::int64_t>(n), p.rsp.values};
  Series cross_ssp{"R_ss'", CorrelationKind::Cross, std::vector<std::int64_t>(n), p.rssp.values};
  Series cross_sps{"R_s's", CorrelationKind::Cross, std::vector<std::int64_t>(n), p.rsps.values};
  for (std::size_t tau = 0; tau < n; ++tau) {
    const std::size_t r = tau % T;
    const std::int64_t rs = p.rs.values[tau];
    if (r == 0) {
      auto_sp.predicted[tau] = rs;
      const std::int64_t cross = tau == 0 ? p.T * p.K - 2 * p.K : rs - 2 * p.K;
      cross_ssp.predicted[tau] = cross;
      cross_sps.predicted[tau] = cross;
    } else {
      const std::int64_t d_r = p.d[r];
      const std::int64_t d_mirror = p.d[T - r];
      auto_sp.predicted[tau] = rs + sign * (2 * d_r + 2 * d_mirror);
      cross_ssp.predicted[tau] = rs + sign * 2 * d_mirror;
      cross_sps.predicted[tau] = rs + sign * 2 * d_r;
    }
  }
  TheoremReport report;
  report.theorem = std::move(name);
  add_shape(report, spec);
  report.labels.emplace_back("s", sign > 0 ? "construction_a" : "construction_b");
  report.series = {std::move(auto_sp), std::move(cross_ssp), std::move(cross_sps)};
  report.value_sets = {{"R_s", distinct_values(p.rs.values)},
                       {"R_s'", distinct_values(p.rsp.values)},
                       {"R_ss'", distinct_values(p.rssp.values)},
                       {"R_s's", distinct_values(p.rsps.values)}};
  return report;
}

}  // namespace

TheoremReport verify_theorem1(const InterleavedSpec& spec) {
  return verify_pair(spec, "theorem1", +1);
}

TheoremReport verify_theorem2(const InterleavedSpec& spec) {
  return verify_pair(spec, "theorem2", -1);
}

TheoremReport verify_corollaries(const InterleavedSpec& spec) {
  const auto p = measure(spec, false);
  const std::size_t n = spec.period();
  const std::size_t T = spec.columns_count();
  TheoremReport report;
  report.theorem = "corollaries";
  add_shape(report, spec);

  // Per-shift equivalences; shifts with tau2 = 0 refer to the constant
  // column on both sides and are outside their scope.
  std::vector<std::size_t> cross_bad;
  std::vector<std::size_t> auto_bad;
  for (std::size_t tau = 0; tau < n; ++tau) {
    const std::size_t r = tau % T;
    if (r == 0) continue;
    const bool cross_eq = p.rsps.values[tau] == p.rssp.values[tau];
    const bool auto_eq = p.rs.values[tau] == p.rsp.values[tau];
    if (cross_eq != (p.d[T - r] == p.d[r])) cross_bad.push_back(tau);
    if (auto_eq != (p.d[T - r] == -p.d[r])) auto_bad.push_back(tau);
  }
  auto per_shift = [](std::string name, const std::vector<std::size_t>& bad,
                      std::string what) {
    Finding f{std::move(name), bad.empty() ? Status::Pass : Status::Fail, std::move(what)};
    if (!bad.empty()) {
      f.detail += "; exactly one side holds at tau =";
      for (auto t : bad) f.detail += " " + std::to_string(t);
    }
    return f;
  };
  report.findings.push_back(per_shift("cross_equality_iff_equal_mirror_balances", cross_bad,
                                      "R_s's(tau) = R_ss'(tau) <=> d(a_{T-tau2}) = d(a_tau2)"));
  report.findings.push_back(per_shift("auto_equality_iff_opposite_mirror_balances", auto_bad,
                                      "R_s(tau) = R_s'(tau) <=> d(a_{T-tau2}) = -d(a_tau2)"));

  const bool s_ideal = is_ideal(p.rs);
  const bool sp_ideal = is_ideal(p.rsp);
  const std::size_t sp_levels = level_count(p.rsp);

  // Constant mirror sum d0 = d(a_{T-x}) + d(a_x).
  const std::int64_t d0 = p.d[T - 1] + p.d[1];
  bool d0_constant = true;
  for (std::size_t x = 1; x < T; ++x) d0_constant = d0_constant && p.d[T - x] + p.d[x] == d0;
  if (!d0_constant) {
    report.findings.push_back({"mirror_sum_zero_ideal_iff", Status::NotApplicable,
                               "d(a_{T-x}) + d(a_x) is not constant"});
    report.findings.push_back({"mirror_sum_nonzero_three_level_iff", Status::NotApplicable,
                               "d(a_{T-x}) + d(a_x) is not constant"});
  } else if (d0 == 0) {
    report.findings.push_back(biconditional("mirror_sum_zero_ideal_iff", sp_ideal, s_ideal,
                                            "s' ideal <=> s ideal (d0 = 0)"));
    report.findings.push_back({"mirror_sum_nonzero_three_level_iff", Status::NotApplicable,
                               "d0 = 0"});
  } else {
    report.findings.push_back({"mirror_sum_zero_ideal_iff", Status::NotApplicable,
                               "d0 = " + std::to_string(d0)});
    report.findings.push_back(biconditional(
        "mirror_sum_nonzero_three_level_iff", sp_levels == 3, s_ideal,
        "s' has 3 autocorrelation levels <=> s ideal (d0 = " + std::to_string(d0) +
            ", levels " + join(distinct_values(p.rsp.values)) + ")"));
  }

  bool constant = true;
  for (std::size_t x = 1; x < T; ++x) constant = constant && p.d[x] == p.d[1];
  if (!constant || p.d[1] == p.K) {
    report.findings.push_back({"equal_cross_three_valued_iff", Status::NotApplicable,
                               constant ? "common balance equals K"
                                        : "column balances are not constant"});
  } else {
    const bool equal = p.rssp.values == p.rsps.values;
    const bool three = equal && level_count(p.rssp) == 3;
    report.findings.push_back(biconditional(
        "equal_cross_three_valued_iff", three, s_ideal,
        "R_ss' = R_s's with 3 values <=> s ideal (values " +
            join(distinct_values(p.rssp.values)) + ")"));
  }

  report.labels.emplace_back("s_verdict", std::string(to_string(classify(p.rs).verdict)));
  report.labels.emplace_back("s_prime_verdict",
                             std::string(to_string(classify(p.rsp).verdict)));
  report.value_sets = {{"R_s", distinct_values(p.rs.values)},
                       {"R_s'", distinct_values(p.rsp.values)},
                       {"R_ss'", distinct_values(p.rssp.values)},
                       {"R_s's", distinct_values(p.rsps.values)}};
  return report;
}

TheoremReport verify_theorem3(const InterleavedSpec& spec, std::int64_t eta,
                              BalanceRegime regime, bool enforce_hypothesis) {
  PredictOptions options;
  options.enforce_hypothesis = enforce_hypothesis;
  const UPredictor predictor(spec, eta, regime, options);
  const auto u = build_u(spec, eta);
  const auto observed = autocorrelation_spectrum(u);

  TheoremReport report;
  report.theorem = "theorem3";
  add_shape(report, spec);
  report.parameters.emplace_back("eta", predictor.parameters().eta);
  report.labels.emplace_back("regime", std::string(to_string(regime)));
  if (auto bad = regime_violation(spec, regime)) {
    report.labels.emplace_back("hypothesis", "violated at column " + std::to_string(*bad));
  } else {
    report.labels.emplace_back("hypothesis", "holds");
  }
  report.series.push_back({"R_u", CorrelationKind::Auto, predictor.spectrum(), observed.values});

  if (regime == BalanceRegime::Antisymmetric) {
    auto score = [&](const std::string& row, int mu2, OffsetIndex index) {
      PredictOptions alt = options;
      alt.enforce_hypothesis = false;
      if (mu2 == 1) alt.row1_index = index; else alt.row3_index = index;
      const UPredictor candidate(spec, eta, regime, alt);
      std::size_t misses = 0;
      for (std::size_t mu = static_cast<std::size_t>(mu2); mu < observed.values.size(); mu += 4) {
        misses += candidate(static_cast<std::int64_t>(mu)) != observed.values[mu] ? 1 : 0;
      }
      report.index_readings.push_back({row, index, misses});
    };
    score("mu2=1", 1, OffsetIndex::Tau1Minus);
    score("mu2=1", 1, OffsetIndex::Tau2Minus);
    score("mu2=3", 3, OffsetIndex::Tau2Plus);
    score("mu2=3", 3, OffsetIndex::Tau2Minus);
  }
  report.value_sets = {{"R_u", distinct_values(observed.values)}};
  return report;
}

bool optimality_condition_holds(const InterleavedSpec& spec, int condition) {
  const auto d = column_balances(spec);
  const std::size_t T = spec.columns_count();
  bool balances_ok = true;
  for (std::size_t x = 1; x < T; ++x) {
    balances_ok = balances_ok && (condition == 1 ? d[x] == 1
                                                 : d[x] == -d[T - x] && (d[x] == 1 || d[x] == -1));
  }
  if (!balances_ok) return false;
  return is_ideal(autocorrelation_spectrum(build(with_constant_column(spec, false))));
}

std::int64_t optimal_u_table(const UParameters& params, std::size_t T,
                             std::span<const std::int64_t> balances, int condition,
                             std::int64_t mu) {
  if (reduce_mod(mu, 4 * params.period) == 0) {
    return 4 * static_cast<std::int64_t>(params.period);
  }
  const auto o = u_offsets(params, T, mu);
  if (condition == 1) {
    switch (o.mu2) {
      case 0: return o.tau2 == 0 ? -4 : 4;
      case 1: return o.tau1_plus == 0 ? 0 : -4;
      case 2: return 0;
      default: return o.tau2_minus == 0 ? 0 : -4;
    }
  }
  switch (o.mu2) {
    case 0: return -4;
    case 1: return o.tau1_minus == 0 ? 0 : 4 * balances[o.tau1_minus];
    case 2: return 0;
    default: return o.tau2_plus == 0 ? 0 : -4 * balances[o.tau2_plus];
  }
}

TheoremReport verify_theorem4(const InterleavedSpec& spec, std::int64_t eta, int condition) {
  if (condition != 1 && condition != 2) {
    throw InvalidInput("condition must be 1 or 2, got " + std::to_string(condition));
  }
  const bool holds1 = optimality_condition_holds(spec, 1);
  const bool holds2 = optimality_condition_holds(spec, 2);
  const bool requested = condition == 1 ? holds1 : holds2;
  if (!requested && (holds1 || holds2)) {
    throw InvalidInput("condition " + std::to_string(condition) +
                       " does not hold but condition " + std::to_string(holds1 ? 1 : 2) +
                       " does; rerun with --condition " + std::to_string(holds1 ? 1 : 2));
  }
  const auto params = UParameters::make(spec.period(), eta);
  const auto u = build_u(spec, eta);
  const auto observed = autocorrelation_spectrum(u);
  const auto verdict = classify(observed).verdict;

  TheoremReport report;
  report.theorem = "theorem4";
  add_shape(report, spec);
  report.parameters.emplace_back("eta", params.eta);
  report.parameters.emplace_back("condition", condition);
  report.labels.emplace_back("condition1", holds1 ? "holds" : "fails");
  report.labels.emplace_back("condition2", holds2 ? "holds" : "fails");
  report.labels.emplace_back("u_verdict", std::string(to_string(verdict)));

  if (requested) {
    const auto d = column_balances(spec);
    Series series{"R_u", CorrelationKind::Auto, std::vector<std::int64_t>(observed.values.size()),
                  observed.values};
    for (std::size_t mu = 0; mu < series.predicted.size(); ++mu) {
      series.predicted[mu] =
          optimal_u_table(params, spec.columns_count(), d, condition, static_cast<std::int64_t>(mu));
    }
    report.series.push_back(std::move(series));
    report.findings.push_back({"u_optimal",
                               verdict == Verdict::NotOptimal ? Status::Fail : Status::Pass,
                               "out-of-phase values " +
                                   join(distinct_values(std::span(observed.values).subspan(1)))});
  } else {
    report.findings.push_back({"u_not_optimal_without_conditions",
                               verdict == Verdict::NotOptimal ? Status::Pass : Status::Fail,
                               "out-of-phase values " +
                                   join(distinct_values(std::span(observed.values).subspan(1)))});
  }
  report.value_sets = {{"R_u", distinct_values(observed.values)}};
  return report;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> odd_shapes(std::size_t max_period) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t K = 1; 3 * K <= max_period; K += 2) {
    for (std::size_t T = 3; K * T <= max_period; T += 2) out.emplace_back(K, T);
  }
  if (out.empty()) {
    throw InvalidInput("no odd (K, T) with T >= 3 fits period budget " +
                       std::to_string(max_period));
  }
  return out;
}

std::pair<std::size_t, std::size_t> draw_shape(std::mt19937_64& rng, std::size_t max_period) {
  const auto shapes = odd_shapes(max_period);
  std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
  return shapes[pick(rng)];
}

BinarySequence random_bits(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return BinarySequence(bits);
}

BinarySequence random_with_balance(std::mt19937_64& rng, std::size_t n, std::int64_t d) {
  const auto ones = static_cast<std::size_t>((static_cast<std::int64_t>(n) + d) / 2);
  std::vector<std::uint8_t> bits(n, 0);
  std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(ones), 1);
  std::shuffle(bits.begin(), bits.end(), rng);
  return BinarySequence(bits);
}

std::int64_t random_balance(std::mt19937_64& rng, std::size_t K) {
  std::uniform_int_distribution<std::size_t> ones(0, K);
  return 2 * static_cast<std::int64_t>(ones(rng)) - static_cast<std::int64_t>(K);
}

}  // namespace

InterleavedSpec random_spec(std::mt19937_64& rng, std::size_t max_period) {
  const auto [K, T] = draw_shape(rng, max_period);
  std::vector<BinarySequence> columns{BinarySequence::zeros(K)};
  for (std::size_t i = 1; i < T; ++i) columns.push_back(random_bits(rng, K));
  return InterleavedSpec(std::move(columns));
}

InterleavedSpec random_constant_spec(std::mt19937_64& rng, std::size_t max_period) {
  const auto [K, T] = draw_shape(rng, max_period);
  const auto c = random_balance(rng, K);
  std::vector<BinarySequence> columns{BinarySequence::zeros(K)};
  for (std::size_t i = 1; i < T; ++i) columns.push_back(random_with_balance(rng, K, c));
  return InterleavedSpec(std::move(columns));
}

InterleavedSpec random_antisymmetric_spec(std::mt19937_64& rng, std::size_t max_period) {
  const auto [K, T] = draw_shape(rng, max_period);
  std::vector<BinarySequence> columns(T, BinarySequence::zeros(K));
  for (std::size_t x = 1; 2 * x < T; ++x) {
    const auto c = random_balance(rng, K);
    columns[x] = random_with_balance(rng, K, c);
    columns[T - x] = random_with_balance(rng, K, -c);
  }
  return InterleavedSpec(std::move(columns));
}

TheoremReport sample_theorem4_reverse(const SamplingOptions& options) {
  std::mt19937_64 rng(options.seed);
  struct Instance {
    InterleavedSpec spec;
    std::int64_t eta;
  };
  std::vector<Instance> instances;
  instances.reserve(options.samples);
  std::size_t rejected = 0;
  while (instances.size() < options.samples) {
    auto spec = random_spec(rng, options.max_period);
    std::uniform_int_distribution<std::int64_t> eta_dist(
        0, static_cast<std::int64_t>(spec.period()) - 1);
    const auto eta = eta_dist(rng);
    if (optimality_condition_holds(spec, 1) || optimality_condition_holds(spec, 2)) {
      ++rejected;
      continue;
    }
    instances.push_back({std::move(spec), eta});
  }

  std::vector<Verdict> verdicts(instances.size());
  const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto& inst = instances[static_cast<std::size_t>(i)];
    verdicts[static_cast<std::size_t>(i)] =
        classify(autocorrelation_spectrum(build_u(inst.spec, inst.eta))).verdict;
  }

  TheoremReport report;
  report.theorem = "theorem4_reverse_sampled";
  report.parameters = {{"samples", static_cast<std::int64_t>(options.samples)},
                       {"seed", static_cast<std::int64_t>(options.seed)},
                       {"max_period", static_cast<std::int64_t>(options.max_period)},
                       {"rejected_conforming", static_cast<std::int64_t>(rejected)}};
  std::size_t counterexamples = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (verdicts[i] == Verdict::NotOptimal) continue;
    ++counterexamples;
    const auto& inst = instances[i];
    std::string detail = "K=" + std::to_string(inst.spec.rows()) +
                         " T=" + std::to_string(inst.spec.columns_count()) +
                         " eta=" + std::to_string(inst.eta) + " columns:";
    for (const auto& col : inst.spec.columns().subspan(1)) detail += " " + col.to_string();
    report.findings.push_back({"sample_" + std::to_string(i), Status::Fail, detail});
  }
  report.parameters.emplace_back("counterexamples", static_cast<std::int64_t>(counterexamples));
  return report;
}

}  // namespace ilseq
