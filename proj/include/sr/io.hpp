#pragma once

#include <string>

#include "json.hpp"
#include "sr/cm.hpp"
#include "sr/complex.hpp"
#include "sr/verify.hpp"

namespace sr {

/// Text facet format: one facet per line, whitespace-separated labels,
/// `#` starts a comment. ParseError carries the line number. The
/// irrelevant complex {∅} has no text form; use the structured format.
SimplicialComplex parse_complex_text(const std::string& text, const std::string& source = "<input>");
std::string write_complex_text(const SimplicialComplex& dx);

/// Structured format: {"labels": [...], "facets": [[...], ...]} with
/// labels optional. Round-trips losslessly, including {∅} as [[]].
SimplicialComplex complex_from_json(const nlohmann::json& doc);
nlohmann::json complex_to_json(const SimplicialComplex& dx);

/// Loads either format; content starting with '{' is treated as JSON.
SimplicialComplex load_complex(const std::string& content, const std::string& source = "<input>");
SimplicialComplex load_complex_file(const std::string& path);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json report_to_json(const MultiplicityReport& rep);
std::string report_to_text(const MultiplicityReport& rep);

nlohmann::json ledger_entry_to_json(const LedgerEntry& entry, const FuzzLedger& ledger);
/// JSON-lines rendering: one record per entry plus a trailing summary.
/// Byte-stable for identical inputs.
std::string ledger_to_jsonl(const FuzzLedger& ledger);

std::string skip_table_text(const SkipTable& table);

} // namespace sr
