#include "sigcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>

#include "sigcol/error.hpp"

namespace sigcol {

namespace {

constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";
constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

int sextet(std::string_view record, std::size_t pos) {
    if (pos >= record.size()) {
        throw Error(ErrorKind::TruncatedRecord,
                    "record ends at byte " + std::to_string(record.size()));
    }
    const auto byte = static_cast<unsigned char>(record[pos]);
    if (byte < 63 || byte > 126) {
        throw Error(ErrorKind::NonCanonicalByte, "byte value " + std::to_string(byte) +
                                                     " at offset " + std::to_string(pos));
    }
    return byte - 63;
}

/// Decodes the size field N(n); returns n and advances `pos`.
int read_size(std::string_view record, std::size_t& pos) {
    if (pos >= record.size()) {
        throw Error(ErrorKind::BadSizeField, "empty record");
    }
    const auto first = static_cast<unsigned char>(record[pos]);
    if (first < 63 || first > 126) {
        throw Error(ErrorKind::BadSizeField, "size byte " + std::to_string(first));
    }
    if (first != 126) {
        ++pos;
        return first - 63;
    }
    if (pos + 1 < record.size() && static_cast<unsigned char>(record[pos + 1]) == 126) {
        throw Error(ErrorKind::UnsupportedSize, "8-byte size field (n > 258047) not supported");
    }
    if (pos + 4 > record.size()) {
        throw Error(ErrorKind::BadSizeField, "truncated 4-byte size field");
    }
    int n = 0;
    for (std::size_t i = 1; i <= 3; ++i) {
        const auto b = static_cast<unsigned char>(record[pos + i]);
        if (b < 63 || b > 126) {
            throw Error(ErrorKind::BadSizeField, "size byte " + std::to_string(b));
        }
        n = (n << 6) | (b - 63);
    }
    if (n < 63) {
        throw Error(ErrorKind::BadSizeField, "4-byte size field encodes n < 63");
    }
    pos += 4;
    return n;
}

/// Big-endian bit reader over 6-bit groups.
class BitReader {
public:
    BitReader(std::string_view data, std::size_t start) : data_(data), pos_(start) {}

    bool has(int bits) const {
        return static_cast<long>((data_.size() - pos_) * 6) - bit_ >= bits;
    }

    int bit() {
        const int value = (sextet(data_, pos_) >> (5 - bit_)) & 1;
        if (++bit_ == 6) {
            bit_ = 0;
            ++pos_;
        }
        return value;
    }

    long bits(int count) {
        long value = 0;
        for (int i = 0; i < count; ++i) value = (value << 1) | bit();
        return value;
    }

private:
    std::string_view data_;
    std::size_t pos_;
    int bit_ = 0;
};

std::string strip_header(std::string_view line, std::string_view header) {
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    return std::string(line);
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view name) {
    if (name == "graph6") return CorpusFormat::Graph6;
    if (name == "sparse6") return CorpusFormat::Sparse6;
    if (name == "planar-code" || name == "planar_code") return CorpusFormat::PlanarCode;
    throw Error(ErrorKind::FormatError, "unknown corpus format '" + std::string(name) + "'");
}

std::string_view to_string(CorpusFormat format) {
    switch (format) {
    case CorpusFormat::Graph6: return "graph6";
    case CorpusFormat::Sparse6: return "sparse6";
    case CorpusFormat::PlanarCode: return "planar-code";
    }
    return "unknown";
}

Graph parse_graph6(std::string_view record) {
    std::size_t pos = 0;
    const int n = read_size(record, pos);
    const long pairs = static_cast<long>(n) * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((pairs + 5) / 6);
    if (record.size() - pos < payload) {
        throw Error(ErrorKind::TruncatedRecord, "graph6 payload needs " + std::to_string(payload) +
                                                    " bytes, found " +
                                                    std::to_string(record.size() - pos));
    }
    if (record.size() - pos > payload) {
        throw Error(ErrorKind::FormatError, "trailing bytes after graph6 payload");
    }
    BitReader reader(record, pos);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (reader.bit()) edges.emplace_back(i, j);
        }
    }
    // Padding bytes must still be printable sextets.
    for (std::size_t p = pos; p < record.size(); ++p) sextet(record, p);
    return build_graph(n, edges);
}

Graph parse_sparse6(std::string_view record) {
    if (record.empty() || record.front() != ':') {
        throw Error(ErrorKind::FormatError, "sparse6 record must start with ':'");
    }
    std::size_t pos = 1;
    const int n = read_size(record, pos);
    for (std::size_t p = pos; p < record.size(); ++p) sextet(record, p);

    int k = 1;
    while ((1L << k) < n) ++k;

    BitReader reader(record, pos);
    std::vector<std::pair<int, int>> edges;
    long v = 0;
    while (reader.has(1 + k)) {
        const int b = reader.bit();
        const long x = reader.bits(k);
        if (b == 1) ++v;
        if (x >= n || v >= n) break;
        if (x > v) {
            v = x;
        } else {
            edges.emplace_back(static_cast<int>(x), static_cast<int>(v));
        }
    }
    return build_graph(n, edges);
}

std::vector<Graph> parse_planar_code(std::string_view bytes) {
    if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader) {
        throw Error(ErrorKind::MissingHeader, "stream does not start with >>planar_code<<");
    }
    std::size_t pos = kPlanarCodeHeader.size();
    std::vector<Graph> out;
    while (pos < bytes.size()) {
        const int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0) {
            throw Error(ErrorKind::UnsupportedSize,
                        "record " + std::to_string(out.size()) +
                            ": two-byte planar_code variant (n >= 256) not supported");
        }
        std::vector<std::vector<int>> lists(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                if (pos >= bytes.size()) {
                    throw Error(ErrorKind::TruncatedRecord,
                                "record " + std::to_string(out.size()) + " ends inside vertex " +
                                    std::to_string(v + 1));
                }
                const int w = static_cast<unsigned char>(bytes[pos++]);
                if (w == 0) break;
                if (w > n) {
                    throw Error(ErrorKind::VertexOutOfRange,
                                "neighbour " + std::to_string(w) + " exceeds n=" +
                                    std::to_string(n));
                }
                lists[v].push_back(w - 1);
            }
        }
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < n; ++v) {
            for (int w : lists[v]) {
                const auto& back = lists[w];
                if (std::find(back.begin(), back.end(), v) == back.end()) {
                    throw Error(ErrorKind::AsymmetricAdjacency,
                                "vertex " + std::to_string(v + 1) + " lists " +
                                    std::to_string(w + 1) + " but not conversely");
                }
                if (v <= w) edges.emplace_back(v, w);
            }
        }
        out.push_back(build_graph(n, edges));
    }
    return out;
}

CorpusStream::CorpusStream(std::istream& in, CorpusFormat format) : in_(in), format_(format) {}

std::optional<Graph> CorpusStream::next() {
    try {
        return format_ == CorpusFormat::PlanarCode ? next_planar_code_record()
                                                   : next_line_record();
    } catch (const Error& e) {
        throw Error(e.kind(), "record " + std::to_string(position_ + 1) + ": " + e.what());
    }
}

std::optional<Graph> CorpusStream::next_line_record() {
    std::string line;
    while (std::getline(in_, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        line = strip_header(line, format_ == CorpusFormat::Graph6 ? kGraph6Header
                                                                  : kSparse6Header);
        if (line.empty()) continue;
        Graph g = format_ == CorpusFormat::Graph6 ? parse_graph6(line) : parse_sparse6(line);
        ++position_;
        return g;
    }
    return std::nullopt;
}

std::optional<Graph> CorpusStream::next_planar_code_record() {
    if (!header_checked_) {
        std::string header(kPlanarCodeHeader.size(), '\0');
        in_.read(header.data(), static_cast<std::streamsize>(header.size()));
        if (in_.gcount() == 0) return std::nullopt;
        if (header != kPlanarCodeHeader) {
            throw Error(ErrorKind::MissingHeader, "stream does not start with >>planar_code<<");
        }
        header_checked_ = true;
    }
    const int first = in_.get();
    if (first == std::char_traits<char>::eof()) return std::nullopt;
    // Re-use the whole-buffer parser on exactly one record.
    std::string record(kPlanarCodeHeader);
    record.push_back(static_cast<char>(first));
    const int n = first;
    int terminated = 0;
    while (n != 0 && terminated < n) {
        const int c = in_.get();
        if (c == std::char_traits<char>::eof()) break;
        record.push_back(static_cast<char>(c));
        if (c == 0) ++terminated;
    }
    auto graphs = parse_planar_code(record);
    ++position_;
    return std::move(graphs.front());
}

std::vector<Graph> read_corpus(const std::string& path, CorpusFormat format) {
    std::vector<Graph> out;
    auto drain = [&](std::istream& in) {
        CorpusStream stream(in, format);
        while (auto g = stream.next()) out.push_back(std::move(*g));
    };
    if (path == "-") {
        drain(std::cin);
        return out;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    drain(in);
    return out;
}

}  // namespace sigcol
