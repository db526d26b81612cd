#include "ilseq/correlation.hpp"

#include <algorithm>
#include <string>

namespace ilseq {

std::string_view to_string(CorrelationKind kind) {
  return kind == CorrelationKind::Auto ? "auto" : "cross";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Ideal: return "ideal";
    case Verdict::Optimal: return "optimal";
    case Verdict::NotOptimal: return "not_optimal";
  }
  return "not_optimal";
}

std::string_view to_string(Symmetry symmetry) {
  switch (symmetry) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Antisymmetric: return "antisymmetric";
    case Symmetry::Neither: return "neither";
  }
  return "neither";
}

namespace reference {

std::int64_t cross_correlation(const BinarySequence& a, const BinarySequence& b,
                               std::int64_t tau) {
  if (a.period() != b.period()) {
    throw InvalidInput("period mismatch: " + std::to_string(a.period()) + " vs " +
                       std::to_string(b.period()));
  }
  const std::size_t n = a.period();
  const std::size_t shift = reduce_mod(tau, n);
  std::int64_t sum = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t u = t + shift < n ? t + shift : t + shift - n;
    sum += sign_of(a[t] != b[u]);
  }
  return sum;
}

CorrelationSpectrum cross_correlation_spectrum(const BinarySequence& a,
                                               const BinarySequence& b) {
  CorrelationSpectrum out{a.period(), CorrelationKind::Cross, {}};
  out.values.resize(a.period());
  for (std::size_t tau = 0; tau < a.period(); ++tau) {
    out.values[tau] = reference::cross_correlation(a, b, static_cast<std::int64_t>(tau));
  }
  return out;
}

CorrelationSpectrum autocorrelation_spectrum(const BinarySequence& a) {
  auto out = reference::cross_correlation_spectrum(a, a);
  out.kind = CorrelationKind::Auto;
  return out;
}

}  // namespace reference

std::int64_t autocorrelation_via_support(const BinarySequence& a, std::int64_t tau) {
  const std::size_t n = a.period();
  const std::size_t shift = reduce_mod(tau, n);
  const auto c = support(a);
  std::int64_t overlap = 0;
  for (auto t : c) {
    if (a[(t + shift) % n]) ++overlap;
  }
  return static_cast<std::int64_t>(n) -
         4 * (static_cast<std::int64_t>(c.size()) - overlap);
}

std::vector<std::int64_t> allowed_out_of_phase(std::size_t period) {
  switch (period % 4) {
    case 0: return {-4, 0, 4};
    case 1: return {-3, 1};
    case 2: return {-2, 2};
    default: return {-1};
  }
}

OptimalityClass classify(const CorrelationSpectrum& spectrum) {
  if (spectrum.kind != CorrelationKind::Auto) {
    throw InvalidInput("optimality classification needs an autocorrelation spectrum");
  }
  OptimalityClass out;
  out.residue = static_cast<int>(spectrum.period % 4);
  out.allowed_out_of_phase = allowed_out_of_phase(spectrum.period);
  const auto& allowed = out.allowed_out_of_phase;
  const bool inside = std::all_of(
      spectrum.values.begin() + 1, spectrum.values.end(), [&](std::int64_t v) {
        return std::binary_search(allowed.begin(), allowed.end(), v);
      });
  if (!inside) {
    out.verdict = Verdict::NotOptimal;
  } else if (out.residue == 3) {
    out.verdict = Verdict::Ideal;
  } else {
    out.verdict = Verdict::Optimal;
  }
  return out;
}

Symmetry symmetry_type(const BinarySequence& s) {
  const std::size_t n = s.period();
  bool symmetric = true;
  bool antisymmetric = true;
  for (std::size_t t = 1; t < n; ++t) {
    const bool x = s[t];
    const bool y = s[n - t];
    symmetric = symmetric && x == y;
    antisymmetric = antisymmetric && x != y;
  }
  if (symmetric) return Symmetry::Symmetric;
  if (antisymmetric) return Symmetry::Antisymmetric;
  return Symmetry::Neither;
}

std::vector<std::int64_t> distinct_values(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ilseq
