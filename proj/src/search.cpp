#include "ilseq/search.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <string>

namespace ilseq {

std::string_view to_string(SearchTarget target) {
  return target == SearchTarget::Ideal ? "ideal" : "optimal";
}

SearchTarget parse_search_target(std::string_view text) {
  if (text == "ideal") return SearchTarget::Ideal;
  if (text == "optimal") return SearchTarget::Optimal;
  throw InvalidInput("search target must be 'ideal' or 'optimal', got '" +
                     std::string(text) + "'");
}

namespace {

void check_period(std::size_t period) {
  if (period < 1 || period > kMaxSearchPeriod) {
    throw InvalidInput("search period " + std::to_string(period) +
                       " outside the budget 1.." + std::to_string(kMaxSearchPeriod));
  }
}

bool meets(Verdict verdict, SearchTarget target) {
  return target == SearchTarget::Ideal ? verdict == Verdict::Ideal
                                       : verdict != Verdict::NotOptimal;
}

// Whole-sequence-in-one-word kernel for N <= 28.
class WordKernel {
 public:
  explicit WordKernel(std::size_t n)
      : n_(static_cast<unsigned>(n)),
        mask_(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1),
        allowed_(allowed_out_of_phase(n)) {
    lo_ = allowed_.front();
    hi_ = allowed_.back();
  }

  std::uint64_t rotate(std::uint64_t w, unsigned tau) const noexcept {
    if (tau == 0) return w;
    return ((w >> tau) | (w << (n_ - tau))) & mask_;
  }

  std::int64_t correlation(std::uint64_t w, unsigned tau) const noexcept {
    return static_cast<std::int64_t>(n_) - 2 * std::popcount(w ^ rotate(w, tau));
  }

  bool allowed(std::int64_t v) const noexcept {
    return std::find(allowed_.begin(), allowed_.end(), v) != allowed_.end();
  }

  // Out-of-phase values must sum to (N - 2|C|)^2 - N.
  bool weight_feasible(std::uint64_t w) const noexcept {
    const std::int64_t n = n_;
    const std::int64_t diff = n - 2 * std::popcount(w);
    const std::int64_t sum = diff * diff - n;
    return sum >= (n - 1) * lo_ && sum <= (n - 1) * hi_;
  }

  // Early-exit test; R(tau) = R(N - tau) so half the lags suffice.
  bool in_class(std::uint64_t w) const noexcept {
    if (!weight_feasible(w)) return false;
    for (unsigned tau = 1; 2 * tau <= n_; ++tau) {
      if (!allowed(correlation(w, tau))) return false;
    }
    return true;
  }

  Verdict fast_verdict(std::uint64_t w) const noexcept {
    if (!in_class(w)) return Verdict::NotOptimal;
    return n_ % 4 == 3 ? Verdict::Ideal : Verdict::Optimal;
  }

  Verdict full_verdict(std::uint64_t w) const noexcept {
    for (unsigned tau = 1; tau < n_; ++tau) {
      if (!allowed(correlation(w, tau))) return Verdict::NotOptimal;
    }
    return n_ % 4 == 3 ? Verdict::Ideal : Verdict::Optimal;
  }

  // Bit t moves to position N-1-t, so numeric order is string order.
  std::uint64_t reversed(std::uint64_t w) const noexcept {
    std::uint64_t r = 0;
    for (unsigned t = 0; t < n_; ++t) r |= ((w >> t) & 1u) << (n_ - 1 - t);
    return r;
  }

  bool is_canonical(std::uint64_t w) const noexcept {
    const std::uint64_t key = reversed(w);
    for (unsigned tau = 1; tau < n_; ++tau) {
      if (reversed(rotate(w, tau)) < key) return false;
    }
    return true;
  }

 private:
  unsigned n_;
  std::uint64_t mask_;
  std::vector<std::int64_t> allowed_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
};

BinarySequence from_word(std::uint64_t w, std::size_t n) {
  return BinarySequence::from_words(n, {w});
}

void finish(SearchResult& result) {
  std::sort(result.representatives.begin(), result.representatives.end(),
            [](const BinarySequence& a, const BinarySequence& b) {
              return a.to_string() < b.to_string();
            });
  result.out_of_phase_values.clear();
  for (const auto& rep : result.representatives) {
    const auto spectrum = autocorrelation_spectrum(rep);
    result.out_of_phase_values.push_back(
        distinct_values(std::span(spectrum.values).subspan(1)));
  }
}

}  // namespace

BinarySequence canonical_rotation(const BinarySequence& s) {
  std::string best = s.to_string();
  for (std::size_t tau = 1; tau < s.period(); ++tau) {
    auto candidate = shift_left(s, static_cast<std::int64_t>(tau)).to_string();
    if (candidate < best) best = std::move(candidate);
  }
  return BinarySequence::from_string(best);
}

SearchResult exhaustive_search(std::size_t period, SearchTarget target,
                               const SearchOptions& options) {
  check_period(period);
  SearchResult result;
  result.period = period;
  result.target = target;
  result.enumerated = std::uint64_t{1} << period;
  if (target == SearchTarget::Ideal && period % 4 != 3 && !options.cross_check) {
    return result;
  }

  const WordKernel kernel(period);
  // Chunks of 2^12 words; small periods fall back to one chunk.
  const unsigned chunk_bits = period > 12 ? 12 : static_cast<unsigned>(period);
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const auto chunks = static_cast<std::int64_t>(result.enumerated / chunk);
  std::vector<std::uint64_t> found;
  std::uint64_t disagreements = 0;
  const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();

#pragma omp parallel num_threads(threads) reduction(+ : disagreements)
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
      for (std::uint64_t w = begin; w < begin + chunk; ++w) {
        bool keep;
        if (options.cross_check) {
          const auto fast = kernel.full_verdict(w);
          const auto slow =
              classify(reference::autocorrelation_spectrum(from_word(w, period))).verdict;
          if (fast != slow) ++disagreements;
          keep = meets(fast, target);
        } else {
          keep = meets(kernel.fast_verdict(w), target);
        }
        if (keep && kernel.is_canonical(w)) local.push_back(w);
      }
    }
#pragma omp critical
    found.insert(found.end(), local.begin(), local.end());
  }

  result.oracle_disagreements = disagreements;
  result.representatives.reserve(found.size());
  for (auto w : found) result.representatives.push_back(from_word(w, period));
  finish(result);
  return result;
}

namespace reference {

SearchResult exhaustive_search(std::size_t period, SearchTarget target) {
  check_period(period);
  SearchResult result;
  result.period = period;
  result.target = target;
  result.enumerated = std::uint64_t{1} << period;
  for (std::uint64_t w = 0; w < result.enumerated; ++w) {
    const auto s = from_word(w, period);
    if (!meets(classify(reference::autocorrelation_spectrum(s)).verdict, target)) continue;
    if (canonical_rotation(s) == s) result.representatives.push_back(s);
  }
  finish(result);
  return result;
}

}  // namespace reference

}  // namespace ilseq
