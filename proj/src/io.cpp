#include "ilseq/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ilseq {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string located(std::string_view source, std::size_t line, std::size_t column,
                    const std::string& message) {
  std::ostringstream os;
  os << source << ':' << line << ':' << column << ": " << message;
  return os.str();
}

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> data_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto end = text.find('\n');
    auto line = trim_right(text.substr(0, end));
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
  }
  return out;
}

BinarySequence parse_bits(const Line& line, std::string_view source) {
  std::vector<std::uint8_t> bits(line.text.size());
  for (std::size_t i = 0; i < line.text.size(); ++i) {
    const char c = line.text[i];
    if (c != '0' && c != '1') {
      throw InvalidInput(located(source, line.number, i + 1,
                                 "invalid character '" + std::string(1, c) +
                                     "', expected '0' or '1'"));
    }
    bits[i] = static_cast<std::uint8_t>(c - '0');
  }
  return BinarySequence(bits);
}

std::size_t parse_count(std::string_view token, const Line& line, std::size_t column,
                        std::string_view source, std::string_view what) {
  std::size_t value = 0;
  if (token.empty()) {
    throw InvalidInput(located(source, line.number, column, "missing " + std::string(what)));
  }
  for (char c : token) {
    if (c < '0' || c > '9') {
      throw InvalidInput(located(source, line.number, column,
                                 std::string(what) + " must be a positive integer"));
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

Json values_json(std::span<const std::int64_t> values) {
  return Json(std::vector<std::int64_t>(values.begin(), values.end()));
}

}  // namespace

BinarySequence parse_sequence(std::string_view text, std::string_view source) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw InvalidInput(located(source, 1, 1, "no sequence line found"));
  if (lines.size() > 1) {
    throw InvalidInput(located(source, lines[1].number, 1,
                               "unexpected second data line; a sequence file holds one line"));
  }
  return parse_bits(lines.front(), source);
}

BinarySequence read_sequence_file(const std::filesystem::path& path) {
  return parse_sequence(read_text_file(path), path.string());
}

std::string format_sequence(const BinarySequence& s, std::string_view comment) {
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + "\n";
  out += s.to_string();
  out += '\n';
  return out;
}

InterleavedSpec parse_spec(std::string_view text, std::string_view source) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw InvalidInput(located(source, 1, 1, "empty spec file"));
  const auto& header = lines.front();
  const auto gap = header.text.find_first_of(" \t");
  if (gap == std::string_view::npos) {
    throw InvalidInput(located(source, header.number, 1, "header must be \"K T\""));
  }
  const auto k_token = header.text.substr(0, gap);
  auto rest = header.text.substr(gap);
  const auto t_start = rest.find_first_not_of(" \t");
  const auto t_token = t_start == std::string_view::npos ? std::string_view{}
                                                         : rest.substr(t_start);
  const std::size_t K = parse_count(k_token, header, 1, source, "K");
  const std::size_t T = parse_count(t_token, header, gap + 1 + t_start, source, "T");
  if (K < 1 || T < 2) {
    throw InvalidInput(located(source, header.number, 1,
                               "need K >= 1 and T >= 2, got K = " + std::to_string(K) +
                                   ", T = " + std::to_string(T)));
  }
  if (lines.size() != T + 1) {
    const auto where = lines.size() > T + 1 ? lines[T + 1].number : lines.back().number;
    throw InvalidInput(located(source, where, 1,
                               "expected " + std::to_string(T) + " column lines, found " +
                                   std::to_string(lines.size() - 1)));
  }
  std::vector<BinarySequence> columns;
  columns.reserve(T);
  for (std::size_t i = 1; i <= T; ++i) {
    const auto& line = lines[i];
    if (line.text == "ZERO") {
      columns.push_back(BinarySequence::zeros(K));
    } else if (line.text == "ONE") {
      columns.push_back(BinarySequence::ones(K));
    } else {
      auto col = parse_bits(line, source);
      if (col.period() != K) {
        throw InvalidInput(located(source, line.number, 1,
                                   "column " + std::to_string(i - 1) + " has length " +
                                       std::to_string(col.period()) + ", expected K = " +
                                       std::to_string(K)));
      }
      columns.push_back(std::move(col));
    }
  }
  return InterleavedSpec(std::move(columns));
}

InterleavedSpec read_spec_file(const std::filesystem::path& path) {
  return parse_spec(read_text_file(path), path.string());
}

std::string format_spec(const InterleavedSpec& spec) {
  std::string out = std::to_string(spec.rows()) + " " +
                    std::to_string(spec.columns_count()) + "\n";
  for (const auto& col : spec.columns()) {
    if (col.weight() == 0) {
      out += "ZERO";
    } else if (col.weight() == col.period()) {
      out += "ONE";
    } else {
      out += col.to_string();
    }
    out += '\n';
  }
  return out;
}

Json to_json(const CorrelationSpectrum& spectrum) {
  Json j;
  j["period"] = spectrum.period;
  j["kind"] = to_string(spectrum.kind);
  j["values"] = values_json(spectrum.values);
  if (spectrum.kind == CorrelationKind::Auto) {
    const auto cls = classify(spectrum);
    j["classification"] = {{"residue", cls.residue}, {"verdict", to_string(cls.verdict)}};
  }
  return j;
}

Json to_json(const TheoremReport& report) {
  Json j;
  j["theorem"] = report.theorem;
  Json params = Json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  Json labels = Json::object();
  for (const auto& [k, v] : report.labels) labels[k] = v;
  j["labels"] = labels;
  Json series = Json::array();
  for (const auto& s : report.series) {
    series.push_back({{"quantity", s.quantity},
                      {"period", s.observed.size()},
                      {"kind", to_string(s.kind)},
                      {"predicted", values_json(s.predicted)},
                      {"observed", values_json(s.observed)},
                      {"mismatched_shifts", s.mismatched_shifts()}});
  }
  j["series"] = series;
  Json findings = Json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"name", f.name}, {"status", to_string(f.status)}, {"detail", f.detail}});
  }
  j["findings"] = findings;
  if (!report.index_readings.empty()) {
    Json readings = Json::array();
    for (const auto& r : report.index_readings) {
      readings.push_back(
          {{"row", r.row}, {"index", to_string(r.index)}, {"mismatches", r.mismatches}});
    }
    j["index_readings"] = readings;
  }
  Json sets = Json::object();
  for (const auto& [k, v] : report.value_sets) sets[k] = values_json(v);
  j["value_sets"] = sets;
  j["mismatches"] = report.mismatches();
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j;
}

Json to_json(const SearchResult& result) {
  Json j;
  j["period"] = result.period;
  j["target"] = to_string(result.target);
  j["enumerated"] = result.enumerated;
  j["count"] = result.representatives.size();
  Json reps = Json::array();
  for (std::size_t i = 0; i < result.representatives.size(); ++i) {
    reps.push_back({{"sequence", result.representatives[i].to_string()},
                    {"balance", balance(result.representatives[i])},
                    {"out_of_phase_values", values_json(result.out_of_phase_values[i])}});
  }
  j["representatives"] = reps;
  j["oracle_disagreements"] = result.oracle_disagreements;
  return j;
}

std::string to_csv(const CorrelationSpectrum& spectrum) {
  std::string out = "tau,value\n";
  for (std::size_t tau = 0; tau < spectrum.values.size(); ++tau) {
    out += std::to_string(tau) + "," + std::to_string(spectrum.values[tau]) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput(path.string() + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput(path.string() + ": cannot open file for writing");
  out << text;
}

}  // namespace ilseq
