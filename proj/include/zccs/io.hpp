#pragma once

// Code-set files, CSV export and correlation reports.
//
// A code-set file is a JSON document with three members, in this order:
// "format_version" (1), "metadata" (construction, q, M, N, L, Z, bit_order and
// every construction parameter) and "codes" (M x N x L integer phases). The
// writer is canonical: serialize(parse(serialize(s))) == serialize(s).

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zccs/constructions.hpp"
#include "zccs/correlation.hpp"

namespace zccs {

inline constexpr int kFormatVersion = 1;

std::string serialize_code_set(const CodeSet& set);
CodeSet parse_code_set(std::string_view text);

void write_code_set(const std::filesystem::path& path, const CodeSet& set);
CodeSet read_code_set(const std::filesystem::path& path);

/// One row per (code, sequence): +1/-1 for q = 2, integer phases otherwise.
/// Metadata goes in a leading '#' comment line.
std::string export_csv(const CodeSet& set);
/// Inverse of export_csv (phases only; no provenance).
CodeSet import_csv(std::string_view text);

/// Summary block, in-zone violations and the full (i, j, tau, re, im) table.
std::string format_report(const CorrelationReport& report);

// Command-line value parsers; malformed input throws ParameterError.
std::vector<int> parse_int_list(std::string_view text);
/// "0-1,1-2:3" -> edges (weight after ':' defaults to `default_weight`).
std::vector<Edge> parse_edge_list(std::string_view text, int default_weight);
/// "0,1" or "00,10": bit strings c_0 c_1 ... c_{l-1}.
std::vector<BitVector> parse_bit_vectors(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace zccs
