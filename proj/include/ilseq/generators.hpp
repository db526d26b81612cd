#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ilseq/binary_sequence.hpp"
#include "ilseq/interleave.hpp"

namespace ilseq {

/// First kind has l(0) = 1, second kind l'(0) = 0. Elsewhere both read 0 on
/// quadratic residues and 1 on non-residues.
enum class LegendreKind { First, Second };

std::string_view to_string(LegendreKind kind);

/// Throws InvalidInput unless p is an odd prime.
BinarySequence legendre(std::int64_t p, LegendreKind kind);

inline constexpr unsigned kMaxMSequenceDegree = 16;

/// Built-in primitive polynomial for degree 2..16, as a coefficient mask with
/// bit i holding the coefficient of x^i (x^4 + x + 1 -> 0x13).
std::uint32_t default_primitive_polynomial(unsigned degree);

/// Linear recurrence s(t + n) = sum_{i<n} c_i s(t + i) seeded with 0...01.
/// Throws InvalidInput when the polynomial has the wrong degree or the output
/// period is not 2^n - 1.
BinarySequence m_sequence(unsigned degree,
                          std::optional<std::uint32_t> polynomial = std::nullopt);

/// For even n, the (2^{n/2} - 1) x (2^{n/2} + 1) array of a rotation of the
/// degree-n m-sequence whose all-zero column sits at index 0.
InterleavedSpec m_sequence_array(unsigned degree,
                                 std::optional<std::uint32_t> polynomial = std::nullopt);

/// Parameters of the twin-prime interleave with K = p, T = p + 2. Index i of
/// each vector is column i; entries at i = 0 are unused (constant column).
struct TwinPrimeSpec {
  std::int64_t p = 0;
  std::vector<std::int64_t> shift;        // e_i = i (p+2)^{-1} mod p
  std::vector<std::uint8_t> flip;         // b(i) = 1 iff i is a residue mod p+2
  std::vector<LegendreKind> column_kind;  // second kind iff b(i) = 1
};

/// Throws InvalidInput unless p and p + 2 are both prime.
TwinPrimeSpec twin_prime_spec(std::int64_t p);

/// Column 0 is 0_p (or 1_p when modified); column i is
/// L^{e_i}(legendre(p, kind_i)) XOR b(i).
InterleavedSpec twin_prime_array(std::int64_t p, bool modified);
BinarySequence twin_prime(std::int64_t p, bool modified);

}  // namespace ilseq
