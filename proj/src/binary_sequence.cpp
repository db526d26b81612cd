#include "ilseq/binary_sequence.hpp"

#include <bit>
#include <utility>

namespace ilseq {

namespace {

constexpr std::size_t kW = BinarySequence::kWordBits;

void clear_tail(std::vector<std::uint64_t>& words, std::size_t period) {
  const std::size_t used = period % kW;
  if (used != 0) words.back() &= (std::uint64_t{1} << used) - 1;
}

}  // namespace

BinarySequence::BinarySequence(std::size_t period,
                               std::vector<std::uint64_t> words)
    : period_(period), words_(std::move(words)) {
  if (period_ == 0) throw InvalidInput("sequence period must be at least 1");
  words_.resize(word_count(period_), 0);
  clear_tail(words_, period_);
}

BinarySequence::BinarySequence(std::span<const std::uint8_t> bits)
    : period_(bits.size()), words_(word_count(bits.size()), 0) {
  if (period_ == 0) throw InvalidInput("sequence period must be at least 1");
  for (std::size_t t = 0; t < bits.size(); ++t) {
    if (bits[t] > 1) {
      throw InvalidInput("bit " + std::to_string(t) + " is not 0 or 1");
    }
    words_[t / kW] |= std::uint64_t{bits[t]} << (t % kW);
  }
}

BinarySequence BinarySequence::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    const char c = text[t];
    if (c != '0' && c != '1') {
      throw InvalidInput("invalid character '" + std::string(1, c) +
                         "' at position " + std::to_string(t + 1));
    }
    bits[t] = static_cast<std::uint8_t>(c - '0');
  }
  return BinarySequence(bits);
}

BinarySequence BinarySequence::from_words(std::size_t period,
                                          std::vector<std::uint64_t> words) {
  return BinarySequence(period, std::move(words));
}

BinarySequence BinarySequence::zeros(std::size_t period) {
  return BinarySequence(period, std::vector<std::uint64_t>(word_count(period), 0));
}

BinarySequence BinarySequence::ones(std::size_t period) {
  return BinarySequence(period,
                        std::vector<std::uint64_t>(word_count(period), ~std::uint64_t{0}));
}

bool BinarySequence::bit(std::int64_t t) const noexcept {
  return (*this)[reduce_mod(t, period_)];
}

std::vector<std::uint8_t> BinarySequence::bits() const {
  std::vector<std::uint8_t> out(period_);
  for (std::size_t t = 0; t < period_; ++t) out[t] = (*this)[t];
  return out;
}

std::string BinarySequence::to_string() const {
  std::string out(period_, '0');
  for (std::size_t t = 0; t < period_; ++t) {
    if ((*this)[t]) out[t] = '1';
  }
  return out;
}

std::size_t BinarySequence::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::size_t reduce_mod(std::int64_t value, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  auto r = value % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

namespace detail {

void extract_bits(std::span<const std::uint64_t> src, std::size_t offset,
                  std::size_t n, std::span<std::uint64_t> out) noexcept {
  const std::size_t word_shift = offset / kW;
  const std::size_t bit_shift = offset % kW;
  const std::size_t nw = word_count(n);
  if (bit_shift == 0) {
    for (std::size_t j = 0; j < nw; ++j) out[j] = src[word_shift + j];
  } else {
    for (std::size_t j = 0; j < nw; ++j) {
      out[j] = (src[word_shift + j] >> bit_shift) |
               (src[word_shift + j + 1] << (kW - bit_shift));
    }
  }
  const std::size_t used = n % kW;
  if (used != 0) out[nw - 1] &= (std::uint64_t{1} << used) - 1;
}

std::vector<std::uint64_t> doubled_words(const BinarySequence& s) {
  const std::size_t n = s.period();
  std::vector<std::uint64_t> out(word_count(2 * n) + 1, 0);
  const auto words = s.words();
  for (std::size_t j = 0; j < words.size(); ++j) out[j] = words[j];
  // Append a second copy starting at bit n.
  const std::size_t ws = n / kW;
  const std::size_t bs = n % kW;
  for (std::size_t j = 0; j < words.size(); ++j) {
    out[ws + j] |= words[j] << bs;
    if (bs != 0) out[ws + j + 1] |= words[j] >> (kW - bs);
  }
  return out;
}

}  // namespace detail

BinarySequence shift_left(const BinarySequence& s, std::int64_t tau) {
  const std::size_t n = s.period();
  const std::size_t r = reduce_mod(tau, n);
  if (r == 0) return s;
  const auto doubled = detail::doubled_words(s);
  std::vector<std::uint64_t> out(word_count(n));
  detail::extract_bits(doubled, r, n, out);
  return BinarySequence::from_words(n, std::move(out));
}

BinarySequence complement(const BinarySequence& s) {
  std::vector<std::uint64_t> out(s.words().begin(), s.words().end());
  for (auto& w : out) w = ~w;
  return BinarySequence::from_words(s.period(), std::move(out));
}

BinarySequence add_constant(const BinarySequence& s, int c) {
  if (c != 0 && c != 1) {
    throw InvalidInput("added constant must be 0 or 1, got " + std::to_string(c));
  }
  return c == 1 ? complement(s) : s;
}

std::vector<std::size_t> support(const BinarySequence& s) {
  std::vector<std::size_t> out;
  out.reserve(s.weight());
  for (std::size_t t = 0; t < s.period(); ++t) {
    if (s[t]) out.push_back(t);
  }
  return out;
}

std::int64_t balance(const BinarySequence& s) {
  return 2 * static_cast<std::int64_t>(s.weight()) -
         static_cast<std::int64_t>(s.period());
}

}  // namespace ilseq
