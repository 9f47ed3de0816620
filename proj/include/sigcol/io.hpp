#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigcol/graph.hpp"

namespace sigcol {

enum class CorpusFormat { Graph6, Sparse6, PlanarCode };

/// Accepts "graph6", "sparse6", "planar-code" (also "planar_code").
CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat format);

/// Largest vertex count representable with the 1- and 4-byte size fields.
inline constexpr int kMaxGraph6Vertices = 258047;

/// One graph6 record without header or trailing newline.
/// Throws BadSizeField, TruncatedRecord, NonCanonicalByte, FormatError
/// (trailing bytes) or UnsupportedSize (8-byte size field).
Graph parse_graph6(std::string_view record);

/// One sparse6 record starting with ':' (no header, no newline).
/// Loops and repeated edges are rejected through build_graph.
Graph parse_sparse6(std::string_view record);

/// Whole planar_code stream: ">>planar_code<<" header then one-byte records.
std::vector<Graph> parse_planar_code(std::string_view bytes);

/// Sequential reader over a corpus. Records are yielded in file order;
/// errors are rethrown with the record index prefixed to the message.
class CorpusStream {
public:
    CorpusStream(std::istream& in, CorpusFormat format);

    std::optional<Graph> next();
    /// Index of the most recently returned record; -1 before the first.
    long position() const noexcept { return position_; }

private:
    std::optional<Graph> next_line_record();
    std::optional<Graph> next_planar_code_record();

    std::istream& in_;
    CorpusFormat format_;
    long position_ = -1;
    bool header_checked_ = false;
};

/// Reads a whole corpus file ("-" for standard input).
std::vector<Graph> read_corpus(const std::string& path, CorpusFormat format);

}  // namespace sigcol
