#pragma once

#include <set>
#include <string>
#include <vector>

#include "fano/catalog.hpp"

namespace fano {

enum class Field { h21, e, h1t, nodes, basket };
enum class Status { match, mismatch, skipped, unsupported };

const char* field_name(Field f);
const char* status_name(Status s);

struct ReportEntry {
    RowKey key;
    Field field{};
    std::string computed; // empty when nothing could be computed
    std::string printed;  // catalogued value, empty when absent
    Status status{};
    std::string detail; // computation route, cited flag, or error text
};

struct VerificationReport {
    std::vector<ReportEntry> entries; // deterministic order: key, then field
    int matches = 0, mismatches = 0, skipped = 0, unsupported = 0;
    /// Mismatches on rows that carry no flag; these drive the exit status.
    int unflagged_mismatches = 0;

    std::string summary() const;
};

struct VerifyOptions {
    std::set<Field> fields{Field::h21, Field::e, Field::h1t, Field::nodes, Field::basket};
    int jobs = 1;
};

/// Run every check the catalogue supports: residue-calculus h21 for
/// hypersurfaces, Chern-class and basket Euler characteristics for complete
/// intersections, cascade folding along projection chains, node recounts,
/// and the elephant moduli formula. Failures become report entries; the
/// function itself does not throw on per-row trouble.
VerificationReport verify_all(const Catalog& catalog, const VerifyOptions& options = {});

std::string render_text(const VerificationReport& rep, bool only_problems = false);
std::string render_json(const VerificationReport& rep);
std::string render_csv(const VerificationReport& rep);

/// Persist computed values next to the catalogue, keyed by row id and source
/// digest, for later incremental runs or external diffing.
void write_results_file(const std::string& catalog_path, const Catalog& catalog,
                        const VerificationReport& rep);

} // namespace fano
