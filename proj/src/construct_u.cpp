#include "ilseq/construct_u.hpp"

#include <string>

#include "ilseq/number_theory.hpp"

namespace ilseq {

std::int64_t modular_fraction(std::int64_t num, std::int64_t den, std::int64_t modulus) {
  if (modulus < 1) {
    throw InvalidInput("modulus must be positive, got " + std::to_string(modulus));
  }
  if (gcd(den, modulus) != 1) {
    throw InvalidInput(std::to_string(num) + "/" + std::to_string(den) +
                       " is undefined modulo N = " + std::to_string(modulus) +
                       " (gcd(" + std::to_string(den) + ", N) != 1)");
  }
  const auto m = static_cast<std::size_t>(modulus);
  const auto inv = mod_inverse(den, modulus);
  return static_cast<std::int64_t>(
      reduce_mod(static_cast<std::int64_t>(reduce_mod(num, m)) * inv, m));
}

UParameters UParameters::make(std::size_t period, std::int64_t eta) {
  if (period % 2 == 0) {
    throw InvalidInput("u-construction needs an odd inner period, got N = " +
                       std::to_string(period));
  }
  const auto n = static_cast<std::int64_t>(period);
  UParameters p;
  p.period = period;
  p.eta = static_cast<std::int64_t>(reduce_mod(eta, period));
  p.quarter = modular_fraction(1, 4, n);
  p.half = modular_fraction(1, 2, n);
  p.three_quarter = modular_fraction(3, 4, n);
  return p;
}

BinarySequence build_u(const BinarySequence& s, const BinarySequence& s_prime,
                       std::int64_t eta) {
  if (s.period() != s_prime.period()) {
    throw InvalidInput("s and s' periods differ: " + std::to_string(s.period()) +
                       " vs " + std::to_string(s_prime.period()));
  }
  const auto p = UParameters::make(s.period(), eta);
  std::vector<BinarySequence> columns;
  columns.reserve(4);
  columns.push_back(s_prime);
  columns.push_back(complement(shift_left(s_prime, p.quarter + p.eta)));
  columns.push_back(complement(shift_left(s, p.half)));
  columns.push_back(complement(shift_left(s, p.three_quarter + p.eta)));
  return build(InterleavedSpec(std::move(columns)));
}

BinarySequence build_u(const InterleavedSpec& spec, std::int64_t eta) {
  return build_u(build(with_constant_column(spec, false)),
                 build(with_constant_column(spec, true)), eta);
}

std::string_view to_string(BalanceRegime regime) {
  return regime == BalanceRegime::Constant ? "const" : "antisym";
}

std::optional<std::size_t> regime_violation(const InterleavedSpec& spec,
                                            BalanceRegime regime) {
  const auto d = column_balances(spec);
  const std::size_t T = spec.columns_count();
  for (std::size_t x = 1; x < T; ++x) {
    const bool ok = regime == BalanceRegime::Constant ? d[x] == d[1] : d[x] == -d[T - x];
    if (!ok) return x;
  }
  return std::nullopt;
}

UOffsets u_offsets(const UParameters& params, std::size_t T, std::int64_t mu) {
  const std::size_t n = params.period;
  const std::size_t m = reduce_mod(mu, 4 * n);
  UOffsets o;
  o.mu1 = static_cast<std::int64_t>(m / 4);
  o.mu2 = static_cast<int>(m % 4);
  o.tau2 = static_cast<std::size_t>(o.mu1) % T;
  auto reduced = [&](std::int64_t v) { return reduce_mod(v, n) % T; };
  o.tau1_plus = reduced(params.quarter + params.eta + o.mu1);
  o.tau1_minus = reduced(params.quarter - params.eta + o.mu1);
  o.tau2_plus = reduced(params.three_quarter + params.eta + o.mu1);
  o.tau2_minus = reduced(params.three_quarter - params.eta + o.mu1);
  return o;
}

std::string_view to_string(OffsetIndex index) {
  switch (index) {
    case OffsetIndex::Tau1Plus: return "tau1_plus";
    case OffsetIndex::Tau1Minus: return "tau1_minus";
    case OffsetIndex::Tau2Plus: return "tau2_plus";
    case OffsetIndex::Tau2Minus: return "tau2_minus";
  }
  return "tau1_minus";
}

std::size_t select(const UOffsets& offsets, OffsetIndex index) {
  switch (index) {
    case OffsetIndex::Tau1Plus: return offsets.tau1_plus;
    case OffsetIndex::Tau1Minus: return offsets.tau1_minus;
    case OffsetIndex::Tau2Plus: return offsets.tau2_plus;
    case OffsetIndex::Tau2Minus: return offsets.tau2_minus;
  }
  return offsets.tau1_minus;
}

UPredictor::UPredictor(const InterleavedSpec& spec, std::int64_t eta,
                       BalanceRegime regime, PredictOptions options)
    : columns_(spec.columns_count()),
      regime_(regime),
      options_(options),
      params_(UParameters::make(spec.period(), eta)),
      inner_(autocorrelation_spectrum(build(with_constant_column(spec, false)))),
      balances_(column_balances(spec)) {
  if (options_.enforce_hypothesis) {
    if (auto bad = regime_violation(spec, regime)) {
      const std::size_t x = *bad;
      const std::string detail =
          regime == BalanceRegime::Constant
              ? "d(a_" + std::to_string(x) + ") = " + std::to_string(balances_[x]) +
                    " differs from d(a_1) = " + std::to_string(balances_[1])
              : "d(a_" + std::to_string(x) + ") = " + std::to_string(balances_[x]) +
                    " but d(a_" + std::to_string(columns_ - x) +
                    ") = " + std::to_string(balances_[columns_ - x]);
      throw HypothesisError(std::string(to_string(regime)) +
                                " balance hypothesis fails at column " +
                                std::to_string(x) + ": " + detail,
                            x);
    }
  }
}

std::int64_t UPredictor::operator()(std::int64_t mu) const {
  const auto n = static_cast<std::int64_t>(params_.period);
  if (reduce_mod(mu, 4 * params_.period) == 0) return 4 * n;
  const auto o = u_offsets(params_, columns_, mu);
  const std::int64_t rs = inner_.values[static_cast<std::size_t>(o.mu1)];
  if (regime_ == BalanceRegime::Constant) {
    const std::int64_t c1 = balances_[1];
    switch (o.mu2) {
      case 0: return 4 * rs + (o.tau2 == 0 ? 0 : 8 * c1);
      case 1: return o.tau1_plus == 0 ? 0 : -4 * c1;
      case 2: return 0;
      default: return o.tau2_minus == 0 ? 0 : -4 * c1;
    }
  }
  switch (o.mu2) {
    case 0: return 4 * rs;
    case 1: return o.tau1_minus == 0 ? 0 : 4 * balances_[select(o, options_.row1_index)];
    case 2: return 0;
    default: return o.tau2_plus == 0 ? 0 : -4 * balances_[select(o, options_.row3_index)];
  }
}

std::vector<std::int64_t> UPredictor::spectrum() const {
  std::vector<std::int64_t> out(4 * params_.period);
  for (std::size_t mu = 0; mu < out.size(); ++mu) {
    out[mu] = (*this)(static_cast<std::int64_t>(mu));
  }
  return out;
}

std::int64_t predict_R_u(std::int64_t mu, const InterleavedSpec& spec, std::int64_t eta,
                         BalanceRegime regime, PredictOptions options) {
  return UPredictor(spec, eta, regime, options)(mu);
}

}  // namespace ilseq
