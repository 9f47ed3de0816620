#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>

#include "sigcol/graph.hpp"
#include "sigcol/report.hpp"
#include "sigcol/solver.hpp"

namespace sigcol {

enum class ScanMode { Conjecture1, Conjecture2Exhaustive, Conjecture2Random };

/// Accepts "conjecture1", "conjecture2-exhaustive", "conjecture2-random".
ScanMode parse_scan_mode(std::string_view name);

struct ScanConfig {
    ScanMode mode = ScanMode::Conjecture1;
    /// Lists are 2-subsets of {1..palette}.
    int palette = 4;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    /// Per (graph, object) solver budget; exceeding it records `skipped`.
    SearchLimits limits;
    /// Exhaustive list scans with more assignments than this are skipped.
    std::uint64_t max_assignments = 1'000'000;
    /// Debug: scan all 2^|E| signatures instead of one per switching class.
    bool all_signatures = false;
    /// Debug: relabel the palette by a seeded permutation before reducing.
    bool permute_colours = false;
    /// Adds wall-clock ms to every record; reports are then not reproducible.
    bool timing = false;
};

struct ScanSummary {
    std::uint64_t graphs = 0;
    std::uint64_t records = 0;
    std::uint64_t colourable = 0;
    std::uint64_t bipartite_ok = 0;
    std::uint64_t not_colourable = 0;
    std::uint64_t witness_failures = 0;
    std::uint64_t skipped = 0;

    bool counterexample_found() const noexcept {
        return not_colourable != 0 || witness_failures != 0;
    }
};

/// Yields corpus graphs in order; std::nullopt ends the corpus.
using GraphSource = std::function<std::optional<Graph>()>;

GraphSource from_span(std::span<const Graph> graphs);

/// Report lines go to `report`; not-4-colourable and witness-failure records
/// are also written to `counterexamples` (when given) with the graph attached.
/// Output order is (graph id, object index) whatever the worker count.
ScanSummary scan_conjecture1(const GraphSource& corpus, const ScanConfig& cfg,
                             std::ostream& report, std::ostream* counterexamples = nullptr);

ScanSummary scan_conjecture2(const GraphSource& corpus, const ScanConfig& cfg,
                             std::ostream& report, std::ostream* counterexamples = nullptr);

/// Dispatches on cfg.mode.
ScanSummary scan(const GraphSource& corpus, const ScanConfig& cfg, std::ostream& report,
                 std::ostream* counterexamples = nullptr);

/// Re-checks a record's certificate against its corpus graph using only
/// is_proper, derive_phi and is_bipartite. Returns false for a digest
/// mismatch or any failed check. Throws MissingCertificate when the record
/// carries none (skipped, not-4-colourable, witness-failure).
bool verify_certificate(const ScanRecord& record, const Graph& graph);

}  // namespace sigcol
