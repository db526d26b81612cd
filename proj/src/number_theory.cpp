#include "ilseq/number_theory.hpp"

#include <string>
#include <utility>

#include "ilseq/binary_sequence.hpp"

namespace ilseq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const auto r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw InvalidInput("modulus must be positive, got " + std::to_string(m));
  std::int64_t r0 = static_cast<std::int64_t>(reduce_mod(a, static_cast<std::size_t>(m)));
  std::int64_t r1 = m;
  std::int64_t x0 = 1;
  std::int64_t x1 = 0;
  while (r1 != 0) {
    const auto q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1) {
    throw InvalidInput(std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  }
  return static_cast<std::int64_t>(reduce_mod(x0, static_cast<std::size_t>(m)));
}

std::vector<std::int64_t> quadratic_residues(std::int64_t p) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InvalidInput(std::to_string(p) + " is not an odd prime");
  }
  std::vector<bool> is_residue(static_cast<std::size_t>(p), false);
  for (std::int64_t x = 1; x < p; ++x) is_residue[static_cast<std::size_t>(x * x % p)] = true;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>((p - 1) / 2));
  for (std::int64_t r = 1; r < p; ++r) {
    if (is_residue[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

}  // namespace ilseq
