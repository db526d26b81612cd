#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ilseq/construct_u.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/interleave.hpp"

namespace ilseq {

enum class Status { Pass, Fail, NotApplicable };

std::string_view to_string(Status status);

/// Predicted against observed values over shifts 0..n-1.
struct Series {
  std::string quantity;
  CorrelationKind kind = CorrelationKind::Auto;
  std::vector<std::int64_t> predicted;
  std::vector<std::int64_t> observed;

  std::vector<std::size_t> mismatched_shifts() const;
};

/// A yes/no claim checked on one instance.
struct Finding {
  std::string name;
  Status status = Status::NotApplicable;
  std::string detail;
};

/// Outcome of evaluating one balance-index reading of a prediction row.
struct IndexReading {
  std::string row;
  OffsetIndex index = OffsetIndex::Tau1Minus;
  std::size_t mismatches = 0;
};

struct TheoremReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<std::pair<std::string, std::string>> labels;
  std::vector<Series> series;
  std::vector<Finding> findings;
  std::vector<IndexReading> index_readings;
  /// Distinct values (zero shift included) of each measured spectrum.
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> value_sets;

  /// Mismatched series entries plus failed findings.
  std::size_t mismatches() const;
  bool passed() const { return mismatches() == 0; }
};

/// Constructions A (s) and B (s') from spec's columns 1..T-1; compares the
/// measured R_{s'}, R_{ss'}, R_{s's} with the values predicted from R_s and
/// the column balances, over every shift.
TheoremReport verify_theorem1(const InterleavedSpec& spec);

/// Same comparison with the roles swapped: s is Construction B and s' is
/// Construction A, so every balance term changes sign.
TheoremReport verify_theorem2(const InterleavedSpec& spec);

/// The three per-shift equivalences and level-count claims relating s, s'
/// and their cross-correlations. Sub-checks whose balance hypothesis does not
/// hold are reported NotApplicable.
TheoremReport verify_corollaries(const InterleavedSpec& spec);

/// Sweeps mu over 0..4N-1 comparing UPredictor with the measured R_u. For the
/// antisymmetric regime also scores each candidate balance index of the
/// mu2 = 1 and mu2 = 3 rows against the measurement.
TheoremReport verify_theorem3(const InterleavedSpec& spec, std::int64_t eta,
                              BalanceRegime regime, bool enforce_hypothesis = true);

/// Ideal s together with
///   condition 1: d(a_x) = 1 for x = 1..T-1, or
///   condition 2: d(a_x) = -d(a_{T-x}) in {1, -1}.
bool optimality_condition_holds(const InterleavedSpec& spec, int condition);

/// Fixed-value table for R_u under a condition (no dependence on R_s).
std::int64_t optimal_u_table(const UParameters& params, std::size_t T,
                             std::span<const std::int64_t> balances, int condition,
                             std::int64_t mu);

/// Forward direction when `condition` holds: row-by-row table match and an
/// optimal classification of u. When neither condition holds, checks that u is
/// not optimal. Throws InvalidInput when only the other condition holds or
/// condition is not 1 or 2.
TheoremReport verify_theorem4(const InterleavedSpec& spec, std::int64_t eta, int condition);

struct SamplingOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t max_period = 105;
};

/// Draws `samples` specs violating both optimality conditions and checks u
/// is not optimal for each; every counterexample is listed as a failed
/// finding. (K, T) is uniform over odd pairs with T >= 3 and K*T <=
/// max_period, column bits and eta are uniform.
TheoremReport sample_theorem4_reverse(const SamplingOptions& options);

// Random instance generators (odd K and T, T >= 3, K*T <= max_period).
InterleavedSpec random_spec(std::mt19937_64& rng, std::size_t max_period);
InterleavedSpec random_constant_spec(std::mt19937_64& rng, std::size_t max_period);
InterleavedSpec random_antisymmetric_spec(std::mt19937_64& rng, std::size_t max_period);

/// Number of distinct values in a spectrum, zero shift included.
std::size_t level_count(const CorrelationSpectrum& spectrum);

}  // namespace ilseq
