#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sigcol/graph.hpp"

namespace sigcol {

enum class Outcome { Colourable, NotColourable, BipartiteClassesOk, WitnessFailure, Skipped };

std::string_view to_string(Outcome outcome);
Outcome parse_outcome(std::string_view text);

enum class ObjectKind { None, Signature, Lists };

/// One scanned (graph, object) pair. See docs/report-format.md.
struct ScanRecord {
    std::size_t graph_id = 0;
    std::uint64_t index = 0;
    ObjectKind kind = ObjectKind::None;
    std::string lists;  ///< "a/b,c/d,..." for ObjectKind::Lists
    std::string sigma;  ///< '+'/'-' per edge; empty only for unscanned graphs
    int k = 4;
    Outcome outcome = Outcome::Skipped;
    std::optional<std::uint64_t> class_index;  ///< full-signature debug scans
    std::uint64_t nodes = 0;
    std::optional<double> elapsed_ms;
    std::string certificate;  ///< "f:..." or "f:...;phi:...;psi:..."
    /// Digest as read back from a line; the writer always recomputes it.
    std::string digest;
    std::string reason;
    /// Present on counterexample-file lines only.
    std::optional<Graph> graph;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// FNV-1a 64-bit, as 16 lowercase hex digits.
std::string certificate_digest(std::string_view certificate);

/// One line, no trailing newline. Fields appear in a fixed order and values
/// never contain spaces.
std::string write_report_line(const ScanRecord& record);

/// Inverse of write_report_line. Throws FormatError.
ScanRecord parse_report_line(std::string_view line);

}  // namespace sigcol
