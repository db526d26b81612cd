#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ilseq {

/// Thrown for malformed or out-of-contract input (period mismatch, bad
/// characters, non-prime moduli, ...). The CLI maps it to exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A period-N cyclic binary sequence.
///
/// Bits are stored packed, 64 per word, bit t of the sequence at bit (t % 64)
/// of word t / 64. Bits of the last word beyond the period are always zero,
/// so word-wise popcounts and equality need no masking. Values are immutable;
/// every transform returns a new sequence.
class BinarySequence {
 public:
  static constexpr std::size_t kWordBits = 64;

  /// Throws InvalidInput when `bits` is empty or holds a value other than 0/1.
  explicit BinarySequence(std::span<const std::uint8_t> bits);

  /// Parses ASCII '0'/'1'. Throws InvalidInput naming the offending position.
  static BinarySequence from_string(std::string_view text);
  /// Takes ownership of packed words; bits past `period` are cleared.
  static BinarySequence from_words(std::size_t period,
                                   std::vector<std::uint64_t> words);
  static BinarySequence zeros(std::size_t period);
  static BinarySequence ones(std::size_t period);

  std::size_t period() const noexcept { return period_; }

  /// Cyclic access: bit(t) == bit(t mod N) for any integer t.
  bool bit(std::int64_t t) const noexcept;
  bool operator[](std::size_t t) const noexcept {
    return (words_[t / kWordBits] >> (t % kWordBits)) & 1u;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<std::uint8_t> bits() const;
  std::string to_string() const;

  /// Number of ones, |C_s|.
  std::size_t weight() const noexcept;

  bool operator==(const BinarySequence&) const = default;

 private:
  BinarySequence(std::size_t period, std::vector<std::uint64_t> words);

  std::size_t period_;
  std::vector<std::uint64_t> words_;
};

inline std::size_t word_count(std::size_t period) {
  return (period + BinarySequence::kWordBits - 1) / BinarySequence::kWordBits;
}

/// Reduces any integer shift into 0..n-1.
std::size_t reduce_mod(std::int64_t value, std::size_t n);

/// Sign of a bit under the fixed convention 0 -> +1, 1 -> -1.
constexpr int sign_of(bool bit) noexcept { return bit ? -1 : 1; }

/// result(t) = s(t + tau mod N). Negative and over-period shifts allowed.
BinarySequence shift_left(const BinarySequence& s, std::int64_t tau);

BinarySequence complement(const BinarySequence& s);

/// result(t) = s(t) XOR c. Throws InvalidInput unless c is 0 or 1.
BinarySequence add_constant(const BinarySequence& s, int c);

/// C_s: positions holding a one, ascending.
std::vector<std::size_t> support(const BinarySequence& s);

/// Balance difference 2|C_s| - N.
std::int64_t balance(const BinarySequence& s);

namespace detail {

/// Copies bits [offset, offset + n) of `src` into `out` (word_count(n) words),
/// clearing bits past n. `src` must hold at least word_count(offset + n) + 1
/// words.
void extract_bits(std::span<const std::uint64_t> src, std::size_t offset,
                  std::size_t n, std::span<std::uint64_t> out) noexcept;

/// s concatenated with itself, padded with one spare word so that
/// extract_bits(doubled, tau, N, ...) is a left rotation by tau.
std::vector<std::uint64_t> doubled_words(const BinarySequence& s);

}  // namespace detail

}  // namespace ilseq
