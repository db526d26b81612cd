#pragma once

#include <cstdint>
#include <vector>

namespace ilseq {

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Greatest common divisor of |a| and |b|.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// a^{-1} mod m in 0..m-1 by the extended Euclidean algorithm.
/// Throws InvalidInput when gcd(a, m) != 1 or m < 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// {x^2 mod p : 1 <= x < p}, ascending. Throws InvalidInput unless p is an
/// odd prime.
std::vector<std::int64_t> quadratic_residues(std::int64_t p);

}  // namespace ilseq
