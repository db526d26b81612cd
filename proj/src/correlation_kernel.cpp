#include <bit>
#include <string>

#include "ilseq/correlation.hpp"

namespace ilseq {

namespace {

constexpr std::size_t kW = BinarySequence::kWordBits;

void require_same_period(const BinarySequence& a, const BinarySequence& b) {
  if (a.period() != b.period()) {
    throw InvalidInput("period mismatch: " + std::to_string(a.period()) + " vs " +
                       std::to_string(b.period()));
  }
}

// Disagreements between a and the left rotation of b by `shift`, reading the
// rotation straight out of b's doubled buffer.
std::size_t rotated_distance(std::span<const std::uint64_t> a,
                             std::span<const std::uint64_t> b_doubled,
                             std::size_t n, std::size_t shift) noexcept {
  const std::size_t word_shift = shift / kW;
  const std::size_t bit_shift = shift % kW;
  const std::size_t nw = a.size();
  const std::size_t tail = n % kW;
  const std::uint64_t tail_mask =
      tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  std::size_t distance = 0;
  for (std::size_t j = 0; j < nw; ++j) {
    std::uint64_t w = b_doubled[word_shift + j];
    if (bit_shift != 0) {
      w = (w >> bit_shift) | (b_doubled[word_shift + j + 1] << (kW - bit_shift));
    }
    if (j + 1 == nw) w &= tail_mask;
    distance += static_cast<std::size_t>(std::popcount(a[j] ^ w));
  }
  return distance;
}

CorrelationSpectrum spectrum_kernel(const BinarySequence& a, const BinarySequence& b,
                                    CorrelationKind kind) {
  require_same_period(a, b);
  const std::size_t n = a.period();
  const auto doubled = detail::doubled_words(b);
  const auto words = a.words();
  CorrelationSpectrum out{n, kind, std::vector<std::int64_t>(n)};
  const auto count = static_cast<std::int64_t>(n);
  // Small spectra are not worth a thread team.
#pragma omp parallel for schedule(static) if (n >= 512)
  for (std::int64_t tau = 0; tau < count; ++tau) {
    const auto d = rotated_distance(words, doubled, n, static_cast<std::size_t>(tau));
    out.values[static_cast<std::size_t>(tau)] = count - 2 * static_cast<std::int64_t>(d);
  }
  return out;
}

}  // namespace

std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b,
                               std::int64_t tau) {
  require_same_period(a, b);
  const std::size_t n = a.period();
  const auto doubled = detail::doubled_words(b);
  const auto d = rotated_distance(a.words(), doubled, n, reduce_mod(tau, n));
  return static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d);
}

CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& a) {
  return spectrum_kernel(a, a, CorrelationKind::Auto);
}

CorrelationSpectrum cross_correlation_spectrum(const BinarySequence& a,
                                               const BinarySequence& b) {
  return spectrum_kernel(a, b, CorrelationKind::Cross);
}

}  // namespace ilseq
