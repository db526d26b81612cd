#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ilseq/binary_sequence.hpp"

namespace ilseq {

/// A (K, T) interleaved array: T columns, each a period-K sequence. Column i
/// occupies positions i, T + i, 2T + i, ... of the built sequence.
///
/// Columns are arbitrary; they need not be shifts of one another (see
/// is_classical for the stricter form).
class InterleavedSpec {
 public:
  /// Throws InvalidInput unless T >= 2 and every column has the same period.
  explicit InterleavedSpec(std::vector<BinarySequence> columns);

  std::size_t rows() const noexcept { return rows_; }     // K
  std::size_t columns_count() const noexcept { return columns_.size(); }  // T
  std::size_t period() const noexcept { return rows_ * columns_.size(); }

  const BinarySequence& column(std::size_t i) const { return columns_.at(i); }
  std::span<const BinarySequence> columns() const noexcept { return columns_; }

  bool operator==(const InterleavedSpec&) const = default;

 private:
  std::size_t rows_;
  std::vector<BinarySequence> columns_;
};

/// tau = quotient * T + remainder, 0 <= remainder < T (floor division).
struct ShiftDecomposition {
  std::int64_t quotient = 0;
  std::size_t remainder = 0;

  bool operator==(const ShiftDecomposition&) const = default;
};

ShiftDecomposition shift_decompose(std::int64_t tau, std::size_t T);

/// u(kT + i) = columns[i](k).
BinarySequence build(const InterleavedSpec& spec);

/// Inverse of build. Throws InvalidInput when K * T != period(u).
InterleavedSpec to_array(const BinarySequence& u, std::size_t K, std::size_t T);

/// Array form of shift_left(build(spec), tau): with tau = q T + r the columns
/// become (L^q a_r, ..., L^q a_{T-1}, L^{q+1} a_0, ..., L^{q+1} a_{r-1}).
InterleavedSpec shifted_array(const InterleavedSpec& spec, std::int64_t tau);

/// I(0_K, a_1, ..., a_{T-1}).
InterleavedSpec construction_a(std::span<const BinarySequence> columns);
/// I(1_K, a_1, ..., a_{T-1}).
InterleavedSpec construction_b(std::span<const BinarySequence> columns);

/// Same columns 1..T-1 with column 0 replaced by 0_K (one = false) or 1_K.
InterleavedSpec with_constant_column(const InterleavedSpec& spec, bool one);

/// True when every nonzero column is a cyclic shift of one base sequence.
bool is_classical(const InterleavedSpec& spec);

/// The K = 1 embedding of s: T = N columns, column x is the single bit s(x),
/// with column 0 forced to zero (Construction A form). Requires N >= 2.
InterleavedSpec embed_unit_columns(const BinarySequence& s);

/// Balance differences of all T columns.
std::vector<std::int64_t> column_balances(const InterleavedSpec& spec);

}  // namespace ilseq
