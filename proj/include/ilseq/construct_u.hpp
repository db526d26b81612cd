#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ilseq/binary_sequence.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/interleave.hpp"

namespace ilseq {

/// num * den^{-1} mod modulus in 0..modulus-1. Throws InvalidInput naming the
/// modulus when den is not invertible.
std::int64_t modular_fraction(std::int64_t num, std::int64_t den, std::int64_t modulus);

/// Shift amounts of the period-4N construction. The fractions 1/4, 1/2, 3/4
/// in a shift exponent are read as modular inverses mod N, so N must be odd.
struct UParameters {
  std::size_t period = 0;  // N
  std::int64_t eta = 0;    // reduced into 0..N-1
  std::int64_t quarter = 0;
  std::int64_t half = 0;
  std::int64_t three_quarter = 0;

  static UParameters make(std::size_t period, std::int64_t eta);
};

/// u = I(s', L^{1/4+eta}(s') + 1, L^{1/2}(s) + 1, L^{3/4+eta}(s) + 1), an
/// interleave with K = N rows and T = 4 columns. Throws InvalidInput on even
/// or mismatched periods.
BinarySequence build_u(const BinarySequence& s, const BinarySequence& s_prime,
                       std::int64_t eta);

/// build_u with s and s' the Construction A and B sequences of spec's
/// columns 1..T-1 (column 0 of spec is ignored).
BinarySequence build_u(const InterleavedSpec& spec, std::int64_t eta);

/// Hypothesis on the column balances d(a_x), x = 1..T-1:
///   Constant      - all equal to one value c1;
///   Antisymmetric - d(a_x) = -d(a_{T-x}).
enum class BalanceRegime { Constant, Antisymmetric };

std::string_view to_string(BalanceRegime regime);

/// First column in 1..T-1 breaking the regime's hypothesis, if any.
std::optional<std::size_t> regime_violation(const InterleavedSpec& spec,
                                            BalanceRegime regime);

class HypothesisError : public InvalidInput {
 public:
  HypothesisError(const std::string& what, std::size_t column)
      : InvalidInput(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// The reduced lag offsets used by the prediction tables. With
/// mu = 4 mu1 + mu2 and a column count T of the inner array:
///   tau2       = mu1 mod T
///   tau1_plus  = (1/4 + eta + mu1 mod N) mod T,  tau1_minus = (1/4 - eta + mu1 ...)
///   tau2_plus  = (3/4 + eta + mu1 mod N) mod T,  tau2_minus = (3/4 - eta + mu1 ...)
struct UOffsets {
  std::int64_t mu1 = 0;
  int mu2 = 0;
  std::size_t tau2 = 0;
  std::size_t tau1_plus = 0;
  std::size_t tau1_minus = 0;
  std::size_t tau2_plus = 0;
  std::size_t tau2_minus = 0;
};

UOffsets u_offsets(const UParameters& params, std::size_t T, std::int64_t mu);

/// Offset whose column balance enters the antisymmetric-regime rows mu2 = 1
/// and mu2 = 3.
enum class OffsetIndex { Tau1Plus, Tau1Minus, Tau2Plus, Tau2Minus };

std::string_view to_string(OffsetIndex index);
std::size_t select(const UOffsets& offsets, OffsetIndex index);

struct PredictOptions {
  /// When false, predictions are produced even if the balances break the
  /// regime; mismatches then show up against the measured spectrum.
  bool enforce_hypothesis = true;
  OffsetIndex row1_index = OffsetIndex::Tau1Minus;
  OffsetIndex row3_index = OffsetIndex::Tau2Plus;
};

/// Closed-form R_u(mu) from the measured spectrum of s and the column
/// balances.
///
/// Constant regime (balance c1):
///   mu = 0                     -> 4KT
///   mu2 = 0, tau2 = 0          -> 4 R_s(mu1)
///   mu2 = 0, tau2 != 0         -> 4 R_s(mu1) + 8 c1
///   mu2 = 1                    -> 0 if tau1_plus = 0, else -4 c1
///   mu2 = 2                    -> 0
///   mu2 = 3                    -> 0 if tau2_minus = 0, else -4 c1
/// Antisymmetric regime:
///   mu = 0                     -> 4KT
///   mu2 = 0                    -> 4 R_s(mu1)
///   mu2 = 1                    -> 0 if tau1_minus = 0, else  4 d(a_{row1_index})
///   mu2 = 2                    -> 0
///   mu2 = 3                    -> 0 if tau2_plus = 0,  else -4 d(a_{row3_index})
class UPredictor {
 public:
  /// Throws HypothesisError when enforce_hypothesis is set and the balances
  /// break the regime, InvalidInput when K*T is even.
  UPredictor(const InterleavedSpec& spec, std::int64_t eta, BalanceRegime regime,
             PredictOptions options = {});

  std::int64_t operator()(std::int64_t mu) const;
  /// Predictions for every mu in 0..4N-1.
  std::vector<std::int64_t> spectrum() const;

  const UParameters& parameters() const noexcept { return params_; }
  const CorrelationSpectrum& inner_spectrum() const noexcept { return inner_; }
  std::span<const std::int64_t> balances() const noexcept { return balances_; }

 private:
  std::size_t columns_;
  BalanceRegime regime_;
  PredictOptions options_;
  UParameters params_;
  CorrelationSpectrum inner_;
  std::vector<std::int64_t> balances_;
};

std::int64_t predict_R_u(std::int64_t mu, const InterleavedSpec& spec, std::int64_t eta,
                         BalanceRegime regime, PredictOptions options = {});

}  // namespace ilseq
