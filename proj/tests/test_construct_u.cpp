#include <doctest.h>

#include <random>

#include "ilseq/construct_u.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/generators.hpp"
#include "ilseq/verify.hpp"
#include "oracle.hpp"

using ilseq::BalanceRegime;
using ilseq::BinarySequence;
using ilseq::InterleavedSpec;

namespace {

InterleavedSpec ms15_spec() { return ilseq::m_sequence_array(4); }

bool within(const std::vector<std::int64_t>& values, std::initializer_list<std::int64_t> allowed) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (std::find(allowed.begin(), allowed.end(), values[i]) == allowed.end()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("modular_fraction") {
  CHECK(ilseq::modular_fraction(1, 4, 15) == 4);
  CHECK(ilseq::modular_fraction(1, 2, 15) == 8);
  CHECK(ilseq::modular_fraction(3, 4, 7) == 6);
  CHECK_THROWS_AS(ilseq::modular_fraction(1, 2, 8), ilseq::InvalidInput);
  CHECK_THROWS_AS(ilseq::UParameters::make(8, 0), ilseq::InvalidInput);
}

TEST_CASE("build_u matches the string construction") {
  const auto l2 = ilseq::legendre(7, ilseq::LegendreKind::Second);
  const auto l1 = ilseq::legendre(7, ilseq::LegendreKind::First);
  for (std::int64_t eta = 0; eta < 7; ++eta) {
    const auto u = ilseq::build_u(l2, l1, eta);
    CHECK(u.to_string() == oracle::u_sequence(l2.to_string(), l1.to_string(), eta));
  }
  const auto u = ilseq::build_u(l2, l1, 0);
  CHECK(u.period() == 28);
  CHECK(within(ilseq::autocorrelation_spectrum(u).values, {0, -4, 4}));
  CHECK(ilseq::to_array(u, 7, 4).column(0) == l1);
}

TEST_CASE("build_u from a spec") {
  const auto spec = ms15_spec();
  const auto s = ilseq::build(spec);
  const auto sp = ilseq::build(ilseq::with_constant_column(spec, true));
  const auto u = ilseq::build_u(spec, 0);
  CHECK(u == ilseq::build_u(s, sp, 0));
  CHECK(u.period() == 60);
  CHECK(within(ilseq::autocorrelation_spectrum(u).values, {0, -4, 4}));
}

TEST_CASE("predicted R_u basics") {
  const auto spec = ms15_spec();
  const ilseq::UPredictor predict(spec, 0, BalanceRegime::Constant);
  CHECK(predict(0) == 60);
  for (std::int64_t mu = 2; mu < 60; mu += 4) CHECK(predict(mu) == 0);
  const auto observed = ilseq::autocorrelation_spectrum(ilseq::build_u(spec, 0)).values;
  // mu = 4 has tau2 = 1, mu = 20 has tau2 = 0.
  CHECK(predict(4) == 4);
  CHECK(observed[4] == 4);
  CHECK(predict(20) == -4);
  CHECK(observed[20] == -4);
}

TEST_CASE("constant regime sweep on the period-15 m-sequence") {
  const auto spec = ms15_spec();
  for (std::int64_t eta = 0; eta < 15; ++eta) {
    const ilseq::UPredictor predict(spec, eta, BalanceRegime::Constant);
    CHECK(predict.spectrum() == ilseq::autocorrelation_spectrum(ilseq::build_u(spec, eta)).values);
  }
}

TEST_CASE("random regimes agree with brute force") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const bool constant = trial % 2 == 0;
    auto spec = constant ? ilseq::random_constant_spec(rng, 105)
                         : ilseq::random_antisymmetric_spec(rng, 105);
    if (spec.period() % 2 == 0) continue;
    const auto regime = constant ? BalanceRegime::Constant : BalanceRegime::Antisymmetric;
    const auto eta = static_cast<std::int64_t>(rng() % spec.period());
    const ilseq::UPredictor predict(spec, eta, regime);
    CHECK(predict.spectrum() == ilseq::autocorrelation_spectrum(ilseq::build_u(spec, eta)).values);
  }
}

TEST_CASE("hypothesis enforcement") {
  const InterleavedSpec spec({BinarySequence::from_string("000"), BinarySequence::from_string("011"),
                              BinarySequence::from_string("111")});
  CHECK(ilseq::regime_violation(spec, BalanceRegime::Constant) == std::size_t{2});
  CHECK_THROWS_AS(ilseq::UPredictor(spec, 0, BalanceRegime::Constant), ilseq::HypothesisError);
  ilseq::PredictOptions loose;
  loose.enforce_hypothesis = false;
  CHECK_NOTHROW(ilseq::UPredictor(spec, 0, BalanceRegime::Constant, loose));
  CHECK(ilseq::regime_violation(ms15_spec(), BalanceRegime::Constant) == std::nullopt);
}

TEST_CASE("offsets") {
  const auto params = ilseq::UParameters::make(15, 2);
  CHECK(params.quarter == 4);
  CHECK(params.half == 8);
  CHECK(params.three_quarter == 12);
  const auto off = ilseq::u_offsets(params, 5, 4 * 7 + 1);
  CHECK(off.mu1 == 7);
  CHECK(off.mu2 == 1);
  CHECK(off.tau1_plus == (4 + 2 + 7) % 15 % 5);
  CHECK(off.tau1_minus == (4 - 2 + 7) % 15 % 5);
  CHECK(off.tau2_plus == (12 + 2 + 7) % 15 % 5);
  CHECK(off.tau2_minus == (12 - 2 + 7) % 15 % 5);
}
