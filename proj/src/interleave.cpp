#include "ilseq/interleave.hpp"

#include <algorithm>
#include <string>

namespace ilseq {

InterleavedSpec::InterleavedSpec(std::vector<BinarySequence> columns)
    : rows_(columns.empty() ? 0 : columns.front().period()),
      columns_(std::move(columns)) {
  if (columns_.size() < 2) {
    throw InvalidInput("an interleaved array needs T >= 2 columns, got " +
                       std::to_string(columns_.size()));
  }
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i].period() != rows_) {
      throw InvalidInput("column " + std::to_string(i) + " has period " +
                         std::to_string(columns_[i].period()) + ", expected K = " +
                         std::to_string(rows_));
    }
  }
}

ShiftDecomposition shift_decompose(std::int64_t tau, std::size_t T) {
  if (T == 0) throw InvalidInput("shift decomposition needs T >= 1");
  const auto remainder = reduce_mod(tau, T);
  const auto quotient =
      (tau - static_cast<std::int64_t>(remainder)) / static_cast<std::int64_t>(T);
  return {quotient, remainder};
}

BinarySequence build(const InterleavedSpec& spec) {
  const std::size_t K = spec.rows();
  const std::size_t T = spec.columns_count();
  std::vector<std::uint64_t> words(word_count(K * T), 0);
  for (std::size_t i = 0; i < T; ++i) {
    const auto& col = spec.column(i);
    for (std::size_t k = 0; k < K; ++k) {
      if (col[k]) {
        const std::size_t t = k * T + i;
        words[t / BinarySequence::kWordBits] |= std::uint64_t{1}
                                                << (t % BinarySequence::kWordBits);
      }
    }
  }
  return BinarySequence::from_words(K * T, std::move(words));
}

InterleavedSpec to_array(const BinarySequence& u, std::size_t K, std::size_t T) {
  if (K == 0 || T == 0 || K * T != u.period()) {
    throw InvalidInput("array shape " + std::to_string(K) + "x" + std::to_string(T) +
                       " does not match period " + std::to_string(u.period()));
  }
  std::vector<BinarySequence> columns;
  columns.reserve(T);
  std::vector<std::uint8_t> bits(K);
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t k = 0; k < K; ++k) bits[k] = u[k * T + i];
    columns.emplace_back(bits);
  }
  return InterleavedSpec(std::move(columns));
}

InterleavedSpec shifted_array(const InterleavedSpec& spec, std::int64_t tau) {
  const std::size_t T = spec.columns_count();
  const auto [q, r] = shift_decompose(
      static_cast<std::int64_t>(reduce_mod(tau, spec.period())), T);
  std::vector<BinarySequence> columns;
  columns.reserve(T);
  for (std::size_t i = r; i < T; ++i) columns.push_back(shift_left(spec.column(i), q));
  for (std::size_t i = 0; i < r; ++i) {
    columns.push_back(shift_left(spec.column(i), q + 1));
  }
  return InterleavedSpec(std::move(columns));
}

namespace {

InterleavedSpec with_leading(BinarySequence lead, std::span<const BinarySequence> rest) {
  std::vector<BinarySequence> columns;
  columns.reserve(rest.size() + 1);
  columns.push_back(std::move(lead));
  columns.insert(columns.end(), rest.begin(), rest.end());
  return InterleavedSpec(std::move(columns));
}

}  // namespace

InterleavedSpec construction_a(std::span<const BinarySequence> columns) {
  if (columns.empty()) throw InvalidInput("construction needs at least one column");
  return with_leading(BinarySequence::zeros(columns.front().period()), columns);
}

InterleavedSpec construction_b(std::span<const BinarySequence> columns) {
  if (columns.empty()) throw InvalidInput("construction needs at least one column");
  return with_leading(BinarySequence::ones(columns.front().period()), columns);
}

InterleavedSpec with_constant_column(const InterleavedSpec& spec, bool one) {
  const auto rest = spec.columns().subspan(1);
  return one ? construction_b(rest) : construction_a(rest);
}

bool is_classical(const InterleavedSpec& spec) {
  const BinarySequence* base = nullptr;
  for (const auto& col : spec.columns()) {
    if (col.weight() == 0) continue;
    if (base == nullptr) {
      base = &col;
      continue;
    }
    if (col.weight() != base->weight()) return false;
    bool found = false;
    for (std::size_t k = 0; k < spec.rows() && !found; ++k) {
      found = shift_left(*base, static_cast<std::int64_t>(k)) == col;
    }
    if (!found) return false;
  }
  return true;
}

InterleavedSpec embed_unit_columns(const BinarySequence& s) {
  if (s.period() < 2) throw InvalidInput("K = 1 embedding needs period >= 2");
  std::vector<BinarySequence> columns;
  columns.reserve(s.period());
  columns.push_back(BinarySequence::zeros(1));
  for (std::size_t x = 1; x < s.period(); ++x) {
    const std::uint8_t b = s[x];
    columns.emplace_back(std::span<const std::uint8_t>(&b, 1));
  }
  return InterleavedSpec(std::move(columns));
}

std::vector<std::int64_t> column_balances(const InterleavedSpec& spec) {
  std::vector<std::int64_t> out;
  out.reserve(spec.columns_count());
  for (const auto& col : spec.columns()) out.push_back(balance(col));
  return out;
}

}  // namespace ilseq
