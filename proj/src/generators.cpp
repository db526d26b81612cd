#include "ilseq/generators.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <string>

#include "ilseq/number_theory.hpp"

namespace ilseq {

std::string_view to_string(LegendreKind kind) {
  return kind == LegendreKind::First ? "first" : "second";
}

BinarySequence legendre(std::int64_t p, LegendreKind kind) {
  const auto residues = quadratic_residues(p);
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(p), 1);
  for (auto r : residues) bits[static_cast<std::size_t>(r)] = 0;
  bits[0] = kind == LegendreKind::First ? 1 : 0;
  return BinarySequence(bits);
}

namespace {

// One primitive trinomial/pentanomial per degree; index = degree.
constexpr std::array<std::uint32_t, kMaxMSequenceDegree + 1> kPrimitive = {
    0,        0,        0x7,      0xB,      0x13,     0x25,
    0x43,     0x83,     0x11D,    0x211,    0x409,    0x805,
    0x1053,   0x201B,   0x4443,   0x8003,   0x1100B,
};

std::string hex(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

}  // namespace

std::uint32_t default_primitive_polynomial(unsigned degree) {
  if (degree < 2 || degree > kMaxMSequenceDegree) {
    throw InvalidInput("m-sequence degree must be in 2.." +
                       std::to_string(kMaxMSequenceDegree) + ", got " +
                       std::to_string(degree));
  }
  return kPrimitive[degree];
}

BinarySequence m_sequence(unsigned degree, std::optional<std::uint32_t> polynomial) {
  // Also validates the degree range.
  const std::uint32_t builtin = default_primitive_polynomial(degree);
  const std::uint32_t poly = polynomial.value_or(builtin);
  if (std::bit_width(poly) != degree + 1) {
    throw InvalidInput("polynomial " + hex(poly) + " does not have degree " +
                       std::to_string(degree));
  }
  const std::uint32_t taps = poly & ((std::uint32_t{1} << degree) - 1);
  const std::size_t period = (std::size_t{1} << degree) - 1;
  const std::uint32_t seed = std::uint32_t{1} << (degree - 1);

  std::vector<std::uint8_t> bits(period);
  std::uint32_t state = seed;  // bit i holds s(t + i)
  std::size_t cycle = 0;
  for (std::size_t t = 0; t < period; ++t) {
    bits[t] = state & 1u;
    const auto next = static_cast<std::uint32_t>(std::popcount(state & taps) & 1);
    state = (state >> 1) | (next << (degree - 1));
    if (state == seed && cycle == 0) cycle = t + 1;
  }
  if (cycle != period) {
    throw InvalidInput("polynomial " + hex(poly) + " is not primitive: recurrence period " +
                       (cycle == 0 ? std::string("does not close") : std::to_string(cycle)) +
                       ", expected " + std::to_string(period));
  }
  return BinarySequence(bits);
}

InterleavedSpec m_sequence_array(unsigned degree, std::optional<std::uint32_t> polynomial) {
  if (degree % 2 != 0) {
    throw InvalidInput("m-sequence array form needs an even degree, got " +
                       std::to_string(degree));
  }
  const auto s = m_sequence(degree, polynomial);
  const std::size_t half = std::size_t{1} << (degree / 2);
  const std::size_t K = half - 1;
  const std::size_t T = half + 1;
  const auto array = to_array(s, K, T);
  for (std::size_t i = 0; i < T; ++i) {
    if (array.column(i).weight() == 0) {
      return to_array(shift_left(s, static_cast<std::int64_t>(i)), K, T);
    }
  }
  throw InvalidInput("degree-" + std::to_string(degree) +
                     " m-sequence has no all-zero array column");
}

TwinPrimeSpec twin_prime_spec(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)) ||
      !is_prime(static_cast<std::uint64_t>(p + 2))) {
    throw InvalidInput("(" + std::to_string(p) + ", " + std::to_string(p + 2) +
                       ") are not twin primes");
  }
  const std::int64_t q = p + 2;
  const auto residues = quadratic_residues(q);
  std::vector<bool> is_residue(static_cast<std::size_t>(q), false);
  for (auto r : residues) is_residue[static_cast<std::size_t>(r)] = true;

  const std::int64_t inverse = mod_inverse(q, p);
  TwinPrimeSpec spec;
  spec.p = p;
  spec.shift.assign(static_cast<std::size_t>(q), 0);
  spec.flip.assign(static_cast<std::size_t>(q), 0);
  spec.column_kind.assign(static_cast<std::size_t>(q), LegendreKind::First);
  for (std::int64_t i = 1; i < q; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    spec.shift[idx] = i * inverse % p;
    spec.flip[idx] = is_residue[idx] ? 1 : 0;
    spec.column_kind[idx] = is_residue[idx] ? LegendreKind::Second : LegendreKind::First;
  }
  return spec;
}

InterleavedSpec twin_prime_array(std::int64_t p, bool modified) {
  const auto spec = twin_prime_spec(p);
  const auto size = static_cast<std::size_t>(p);
  std::vector<BinarySequence> columns;
  columns.reserve(size + 2);
  columns.push_back(modified ? BinarySequence::ones(size) : BinarySequence::zeros(size));
  const auto first = legendre(p, LegendreKind::First);
  const auto second = legendre(p, LegendreKind::Second);
  for (std::size_t i = 1; i < size + 2; ++i) {
    const auto& base = spec.column_kind[i] == LegendreKind::First ? first : second;
    columns.push_back(add_constant(shift_left(base, spec.shift[i]), spec.flip[i]));
  }
  return InterleavedSpec(std::move(columns));
}

BinarySequence twin_prime(std::int64_t p, bool modified) {
  return build(twin_prime_array(p, modified));
}

}  // namespace ilseq
