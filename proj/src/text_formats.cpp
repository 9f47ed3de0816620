#include "sigcol/text_formats.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "sigcol/error.hpp"

namespace sigcol {

namespace {

/// Non-empty, non-comment lines with their 1-based line numbers.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        fn(line, number);
    }
}

[[noreturn]] void bad_line(int number, const std::string& what) {
    throw Error(ErrorKind::FormatError, "line " + std::to_string(number) + ": " + what);
}

template <typename Reader>
auto with_file(const std::string& path, Reader&& read) {
    if (path == "-") return read(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    return read(in);
}

}  // namespace

SignedGraph read_signed_graph(std::istream& in) {
    std::optional<int> n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> signs;
    for_each_data_line(in, [&](const std::string& line, int number) {
        std::istringstream fields(line);
        if (!n) {
            std::string tag;
            int count = -1;
            if (!(fields >> tag >> count) || tag != "n" || count < 0) {
                bad_line(number, "expected 'n <vertex count>'");
            }
            n = count;
            return;
        }
        int u = 0;
        int v = 0;
        std::string sign = "+";
        if (!(fields >> u >> v)) bad_line(number, "expected 'u v [+|-]'");
        fields >> sign;
        if (sign != "+" && sign != "-") bad_line(number, "sign must be '+' or '-'");
        std::string extra;
        if (fields >> extra) bad_line(number, "unexpected trailing field '" + extra + "'");
        edges.emplace_back(u, v);
        signs.push_back(sign == "+" ? 1 : -1);
    });
    if (!n) throw Error(ErrorKind::FormatError, "missing 'n <vertex count>' line");
    return SignedGraph(build_graph(*n, edges), Signature(std::move(signs)));
}

std::string write_signed_graph(const SignedGraph& sg) {
    std::string out = "n " + std::to_string(sg.graph().vertex_count()) + "\n";
    const auto edges = sg.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out += std::to_string(edges[i].u) + ' ' + std::to_string(edges[i].v) + ' ' +
               (sg.sign(i) > 0 ? '+' : '-') + '\n';
    }
    return out;
}

ListAssignment read_list_assignment(std::istream& in, int n) {
    std::vector<std::optional<ColourPair>> lists(n);
    for_each_data_line(in, [&](const std::string& line, int number) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) bad_line(number, "expected 'v: a b'");
        std::istringstream head(line.substr(0, colon));
        std::istringstream tail(line.substr(colon + 1));
        int v = -1;
        int a = 0;
        int b = 0;
        if (!(head >> v) || !(tail >> a >> b)) bad_line(number, "expected 'v: a b'");
        std::string extra;
        if (tail >> extra) bad_line(number, "a list has exactly two colours");
        if (v < 0 || v >= n) {
            throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(number) +
                                                         ": vertex " + std::to_string(v));
        }
        if (a < 1 || a >= b) {
            throw Error(ErrorKind::InvalidList, "line " + std::to_string(number) +
                                                    ": list needs 1 <= a < b");
        }
        if (lists[v]) {
            throw Error(ErrorKind::InvalidList, "line " + std::to_string(number) + ": vertex " +
                                                    std::to_string(v) + " listed twice");
        }
        lists[v] = ColourPair{a, b};
    });
    std::vector<ColourPair> out;
    out.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (!lists[v]) {
            throw Error(ErrorKind::MissingList, "no list for vertex " + std::to_string(v));
        }
        out.push_back(*lists[v]);
    }
    return ListAssignment(std::move(out));
}

SignedGraph read_signed_graph_file(const std::string& path) {
    return with_file(path, [](std::istream& in) { return read_signed_graph(in); });
}

ListAssignment read_list_assignment_file(const std::string& path, int n) {
    return with_file(path, [n](std::istream& in) { return read_list_assignment(in, n); });
}

}  // namespace sigcol
