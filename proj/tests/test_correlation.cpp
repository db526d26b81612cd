#include <doctest.h>

#include <numeric>
#include <random>

#include "ilseq/correlation.hpp"
#include "ilseq/generators.hpp"
#include "ilseq/number_theory.hpp"
#include "oracle.hpp"

using ilseq::BinarySequence;
using ilseq::Verdict;

namespace {

BinarySequence seq(const std::string& text) { return BinarySequence::from_string(text); }

BinarySequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return BinarySequence(bits);
}

}  // namespace

TEST_CASE("cross_correlation values") {
  const auto l = seq("0001011");
  CHECK(ilseq::cross_correlation(l, l, 0) == 7);
  CHECK(ilseq::cross_correlation(l, l, 1) == -1);
  CHECK(ilseq::cross_correlation(l, ilseq::complement(l), 0) == -7);
  CHECK(ilseq::autocorrelation_spectrum(l).values ==
        std::vector<std::int64_t>{7, -1, -1, -1, -1, -1, -1});
  CHECK(ilseq::autocorrelation_spectrum(seq("000")).values ==
        std::vector<std::int64_t>{3, 3, 3});
  CHECK_THROWS_AS(ilseq::cross_correlation(l, seq("011"), 0), ilseq::InvalidInput);
}

TEST_CASE("support identity") {
  const auto l = seq("0001011");
  CHECK(ilseq::autocorrelation_via_support(l, 1) == -1);
  CHECK(ilseq::autocorrelation_via_support(l, 0) == 7);
  CHECK(ilseq::autocorrelation_via_support(seq("00000"), 3) == 5);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_sequence(rng, 1 + rng() % 90);
    const auto tau = static_cast<std::int64_t>(rng() % 300) - 150;
    CHECK(ilseq::autocorrelation_via_support(s, tau) == ilseq::cross_correlation(s, s, tau));
  }
}

TEST_CASE("kernel agrees with reference and string oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const auto a = random_sequence(rng, n);
    const auto b = random_sequence(rng, n);
    const auto fast = ilseq::cross_correlation_spectrum(a, b);
    CHECK(fast == ilseq::reference::cross_correlation_spectrum(a, b));
    CHECK(fast.values == oracle::spectrum(a.to_string(), b.to_string()));
    CHECK(ilseq::autocorrelation_spectrum(a) == ilseq::reference::autocorrelation_spectrum(a));
  }
}

TEST_CASE("kernel agrees on a large period") {
  std::mt19937_64 rng(9);
  const auto a = random_sequence(rng, 1500);
  CHECK(ilseq::autocorrelation_spectrum(a) == ilseq::reference::autocorrelation_spectrum(a));
}

TEST_CASE("correlation identities") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 120;
    const auto a = random_sequence(rng, n);
    const auto b = random_sequence(rng, n);
    const auto ab = ilseq::cross_correlation_spectrum(a, b).values;
    const auto ba = ilseq::cross_correlation_spectrum(b, a).values;
    for (std::size_t tau = 0; tau < n; ++tau) CHECK(ab[tau] == ba[(n - tau) % n]);

    const auto r = ilseq::autocorrelation_spectrum(a).values;
    const auto d = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(a.weight());
    CHECK(std::accumulate(r.begin(), r.end(), std::int64_t{0}) == d * d);
    CHECK(ilseq::autocorrelation_spectrum(ilseq::complement(a)).values == r);
    CHECK(ilseq::autocorrelation_spectrum(ilseq::shift_left(a, 17)).values == r);
  }
}

TEST_CASE("allowed out-of-phase sets") {
  CHECK(ilseq::allowed_out_of_phase(8) == std::vector<std::int64_t>{-4, 0, 4});
  CHECK(ilseq::allowed_out_of_phase(13) == std::vector<std::int64_t>{-3, 1});
  CHECK(ilseq::allowed_out_of_phase(6) == std::vector<std::int64_t>{-2, 2});
  CHECK(ilseq::allowed_out_of_phase(7) == std::vector<std::int64_t>{-1});
}

TEST_CASE("classify") {
  CHECK(ilseq::classify(ilseq::autocorrelation_spectrum(seq("0001011"))).verdict ==
        Verdict::Ideal);
  const auto l13 = ilseq::legendre(13, ilseq::LegendreKind::First);
  const auto cls = ilseq::classify(ilseq::autocorrelation_spectrum(l13));
  CHECK(cls.verdict == Verdict::Optimal);
  CHECK(cls.residue == 1);
  CHECK(ilseq::classify(ilseq::autocorrelation_spectrum(seq("000"))).verdict ==
        Verdict::NotOptimal);
  CHECK_THROWS_AS(
      ilseq::classify(ilseq::cross_correlation_spectrum(seq("011"), seq("101"))),
      ilseq::InvalidInput);
}

TEST_CASE("Legendre p=13 spectra depend on the kind") {
  const auto qr = ilseq::quadratic_residues(13);
  const auto first =
      ilseq::autocorrelation_spectrum(ilseq::legendre(13, ilseq::LegendreKind::First)).values;
  const auto second =
      ilseq::autocorrelation_spectrum(ilseq::legendre(13, ilseq::LegendreKind::Second)).values;
  for (std::int64_t tau = 1; tau < 13; ++tau) {
    const bool residue = std::find(qr.begin(), qr.end(), tau) != qr.end();
    // l(0) = 1 contributes -2 chi(tau); l'(0) = 0 contributes +2 chi(tau).
    CHECK(first[static_cast<std::size_t>(tau)] == (residue ? -3 : 1));
    CHECK(second[static_cast<std::size_t>(tau)] == (residue ? 1 : -3));
  }
}

TEST_CASE("symmetry_type") {
  for (auto kind : {ilseq::LegendreKind::First, ilseq::LegendreKind::Second}) {
    CHECK(ilseq::symmetry_type(ilseq::legendre(13, kind)) == ilseq::Symmetry::Symmetric);
    CHECK(ilseq::symmetry_type(ilseq::legendre(7, kind)) == ilseq::Symmetry::Antisymmetric);
  }
  CHECK(ilseq::symmetry_type(seq("0110")) == ilseq::Symmetry::Neither);
}

TEST_CASE("distinct_values") {
  const std::vector<std::int64_t> v{3, -1, 3, 7, -1};
  CHECK(ilseq::distinct_values(v) == std::vector<std::int64_t>{-1, 3, 7});
}
