#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ilseq/binary_sequence.hpp"
#include "ilseq/correlation.hpp"

namespace ilseq {

inline constexpr std::size_t kMaxSearchPeriod = 28;

enum class SearchTarget { Ideal, Optimal };

std::string_view to_string(SearchTarget target);
/// Throws InvalidInput for anything but "ideal" / "optimal".
SearchTarget parse_search_target(std::string_view text);

struct SearchOptions {
  /// 0 = OpenMP default.
  int jobs = 0;
  /// Re-classify every enumerated sequence with the definitional oracle and
  /// count disagreements with the word kernel.
  bool cross_check = false;
};

struct SearchResult {
  std::size_t period = 0;
  SearchTarget target = SearchTarget::Ideal;
  /// Lexicographically least rotations, sorted ascending.
  std::vector<BinarySequence> representatives;
  /// Distinct out-of-phase autocorrelation values of each representative.
  std::vector<std::vector<std::int64_t>> out_of_phase_values;
  std::uint64_t enumerated = 0;
  std::uint64_t oracle_disagreements = 0;
};

/// Least rotation of s under '0' < '1' string order.
BinarySequence canonical_rotation(const BinarySequence& s);

/// Enumerates all 2^N sequences, keeps those meeting the target, one
/// representative per rotation class. Complements are not merged. Throws
/// InvalidInput outside 1..kMaxSearchPeriod.
SearchResult exhaustive_search(std::size_t period, SearchTarget target,
                               const SearchOptions& options = {});

namespace reference {

/// Serial enumeration using the definitional spectrum and classify().
SearchResult exhaustive_search(std::size_t period, SearchTarget target);

}  // namespace reference

}  // namespace ilseq
