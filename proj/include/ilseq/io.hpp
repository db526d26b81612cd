#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ilseq/binary_sequence.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/interleave.hpp"
#include "ilseq/search.hpp"
#include "ilseq/verify.hpp"

namespace ilseq {

using Json = nlohmann::ordered_json;

/// Sequence text format: optional '#' comment lines, then one line of
/// '0'/'1' characters whose length is the period. Blank lines are ignored.
/// Errors name `source`, line and column.
BinarySequence parse_sequence(std::string_view text, std::string_view source = "<input>");
BinarySequence read_sequence_file(const std::filesystem::path& path);
std::string format_sequence(const BinarySequence& s, std::string_view comment = {});

/// Spec file format: "K T" on the first data line, then T lines, each a
/// K-character bitstring or ZERO / ONE for a constant column. '#' comments
/// and blank lines are ignored.
InterleavedSpec parse_spec(std::string_view text, std::string_view source = "<input>");
InterleavedSpec read_spec_file(const std::filesystem::path& path);
std::string format_spec(const InterleavedSpec& spec);

/// {"period", "kind", "values", "classification": {"residue", "verdict"}};
/// classification only for autocorrelation spectra.
Json to_json(const CorrelationSpectrum& spectrum);
Json to_json(const TheoremReport& report);
Json to_json(const SearchResult& result);

/// "tau,value" rows with a header line.
std::string to_csv(const CorrelationSpectrum& spectrum);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace ilseq
