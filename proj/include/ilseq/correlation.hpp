#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ilseq/binary_sequence.hpp"

namespace ilseq {

enum class CorrelationKind { Auto, Cross };

/// values[tau] = R(tau) for tau = 0..N-1.
struct CorrelationSpectrum {
  std::size_t period = 0;
  CorrelationKind kind = CorrelationKind::Auto;
  std::vector<std::int64_t> values;

  bool operator==(const CorrelationSpectrum&) const = default;
};

enum class Verdict { Ideal, Optimal, NotOptimal };

/// Smallest admissible out-of-phase set for N mod 4, and whether a spectrum
/// stays inside it.
struct OptimalityClass {
  int residue = 0;
  std::vector<std::int64_t> allowed_out_of_phase;
  Verdict verdict = Verdict::NotOptimal;
};

enum class Symmetry { Symmetric, Antisymmetric, Neither };

std::string_view to_string(CorrelationKind kind);
std::string_view to_string(Verdict verdict);
std::string_view to_string(Symmetry symmetry);

// Serial definitional implementations: the sum over t of (-1)^(a(t)+b(t+tau)).
// Kept as the oracle for the packed kernel below.
namespace reference {

std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b,
                               std::int64_t tau);
CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& a);
CorrelationSpectrum cross_correlation_spectrum(const BinarySequence& a,
                                               const BinarySequence& b);

}  // namespace reference

// Packed kernel: R(tau) = N - 2 * weight(a XOR rotate(b, tau)). Full spectra
// partition the lag range across OpenMP threads.

/// Throws InvalidInput when the periods differ.
std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b,
                               std::int64_t tau);
CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& a);
CorrelationSpectrum cross_correlation_spectrum(const BinarySequence& a,
                                               const BinarySequence& b);

/// R_a(tau) = N - 4(|C_a| - |(tau + C_a) ∩ C_a|), by counting the support
/// intersection directly.
std::int64_t autocorrelation_via_support(const BinarySequence& a, std::int64_t tau);

std::vector<std::int64_t> allowed_out_of_phase(std::size_t period);

/// Lags 1..N-1 only. Throws InvalidInput for a cross spectrum.
OptimalityClass classify(const CorrelationSpectrum& spectrum);

/// Checks s(t) = s(N-t) and s(t) + s(N-t) = 1 over t = 1..N-1.
Symmetry symmetry_type(const BinarySequence& s);

/// Sorted distinct values.
std::vector<std::int64_t> distinct_values(std::span<const std::int64_t> values);

}  // namespace ilseq
