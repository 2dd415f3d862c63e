#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "agr/report.hpp"
#include "agr/simplicial.hpp"

namespace agr {

/// Fixed JSON schema for reports: keys kind, input, krull_dim, multiplicity,
/// embedding_dim, cohen_macaulay, gorenstein, almost_gorenstein,
/// pseudo_gorenstein, cm_type, a_invariant, level, notes. Tri-states appear
/// as true/false/"unknown", absent numerics as null. Key order and spacing
/// are deterministic so golden files can pin the output.
std::string report_to_json(const ClassificationReport& r);
ClassificationReport report_from_json(const std::string& text);

std::string report_to_table(const ClassificationReport& r);

/// "3,4,5" -> {3,4,5}; whitespace around entries is ignored.
std::vector<Int> parse_generator_list(const std::string& text);

/// "d=6,n=3" (or bare "6,3") -> (6,3).
std::pair<Int, Int> parse_veronese_params(const std::string& text);

/// "q" -> rationals, "p:5" -> F_5.
Field parse_field(const std::string& text);

/// Complex file: first non-comment line n=<int>, then one facet per line as
/// space-separated 1-based vertices. '#' starts a comment anywhere.
SimplicialComplex parse_complex_text(const std::string& text);
SimplicialComplex load_complex_file(const std::string& path);

struct BatchEntry {
    std::string kind; ///< sgp | complex | veronese
    std::string label;
    std::string payload;
};

struct BatchResult {
    std::string label;
    std::string status; ///< "ok" | "error"
    std::optional<ClassificationReport> report;
    std::string message;
};

/// Parses and validates a whole manifest before anything runs: known kinds,
/// unique labels, parseable payloads, readable complex files.
std::vector<BatchEntry> parse_manifest(std::istream& in);

/// Runs every entry (workers > 1 processes them concurrently); the result
/// order always matches the manifest order. Per-entry input errors become
/// "error" records; internal inconsistencies still propagate.
std::vector<BatchResult> run_batch(const std::vector<BatchEntry>& entries, int workers, const Field& field);

std::string batch_to_json(const std::vector<BatchResult>& results);
std::string batch_summary(const std::vector<BatchResult>& results);

/// Maps exceptions to process exit codes: 0 from the body, 1 for rejected
/// input, 2 for an internal cross-check failure.
int guarded_cli(const std::function<int()>& body, std::ostream& err);

/// Full command-line front end; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace agr
