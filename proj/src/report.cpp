#include "sigcol/report.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <vector>

#include "sigcol/error.hpp"

namespace sigcol {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw Error(ErrorKind::FormatError, "report line: " + what);
}

template <typename T>
T parse_number(std::string_view text, std::string_view key) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        bad("bad " + std::string(key) + " value '" + std::string(text) + "'");
    }
    return value;
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.u) + '-' + std::to_string(e.v);
    }
    return out.empty() ? "-" : out;
}

Graph parse_edge_list(int n, std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    if (text != "-") {
        while (!text.empty()) {
            const auto comma = text.find(',');
            const auto item = text.substr(0, comma);
            const auto dash = item.find('-');
            if (dash == std::string_view::npos) bad("bad edge '" + std::string(item) + "'");
            edges.emplace_back(parse_number<int>(item.substr(0, dash), "edge"),
                               parse_number<int>(item.substr(dash + 1), "edge"));
            text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        }
    }
    return build_graph(n, edges);
}

}  // namespace

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
    case Outcome::Colourable: return "colourable";
    case Outcome::NotColourable: return "not-4-colourable";
    case Outcome::BipartiteClassesOk: return "bipartite-classes-ok";
    case Outcome::WitnessFailure: return "witness-failure";
    case Outcome::Skipped: return "skipped";
    }
    return "unknown";
}

Outcome parse_outcome(std::string_view text) {
    for (auto o : {Outcome::Colourable, Outcome::NotColourable, Outcome::BipartiteClassesOk,
                   Outcome::WitnessFailure, Outcome::Skipped}) {
        if (to_string(o) == text) return o;
    }
    bad("unknown outcome '" + std::string(text) + "'");
}

std::string certificate_digest(std::string_view certificate) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : certificate) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

std::string write_report_line(const ScanRecord& r) {
    std::string line = "graph=" + std::to_string(r.graph_id) + " index=" + std::to_string(r.index);
    switch (r.kind) {
    case ObjectKind::None: line += " object=-"; break;
    case ObjectKind::Signature: line += " object=sig:" + r.sigma; break;
    case ObjectKind::Lists: line += " object=lists:" + r.lists; break;
    }
    line += " k=" + std::to_string(r.k);
    line += " outcome=";
    line += to_string(r.outcome);
    if (r.kind != ObjectKind::Signature && !r.sigma.empty()) line += " sigma=" + r.sigma;
    if (r.class_index) line += " class=" + std::to_string(*r.class_index);
    line += " nodes=" + std::to_string(r.nodes);
    if (r.elapsed_ms) line += " ms=" + format_ms(*r.elapsed_ms);
    if (!r.certificate.empty()) {
        line += " cert=" + r.certificate + " digest=" + certificate_digest(r.certificate);
    }
    if (!r.reason.empty()) line += " reason=" + r.reason;
    if (r.graph) {
        line += " n=" + std::to_string(r.graph->vertex_count()) + " edges=" + edge_list(*r.graph);
    }
    return line;
}

ScanRecord parse_report_line(std::string_view line) {
    std::map<std::string, std::string, std::less<>> fields;
    while (!line.empty()) {
        const auto space = line.find(' ');
        const auto token = line.substr(0, space);
        line = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
        if (token.empty()) continue;
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) bad("token '" + std::string(token) + "' lacks '='");
        if (!fields.emplace(std::string(token.substr(0, eq)), std::string(token.substr(eq + 1)))
                 .second) {
            bad("repeated key '" + std::string(token.substr(0, eq)) + "'");
        }
    }
    auto take = [&](std::string_view key) -> std::optional<std::string> {
        auto it = fields.find(key);
        if (it == fields.end()) return std::nullopt;
        std::string value = std::move(it->second);
        fields.erase(it);
        return value;
    };
    auto require = [&](std::string_view key) {
        auto value = take(key);
        if (!value) bad("missing key '" + std::string(key) + "'");
        return *value;
    };

    ScanRecord r;
    r.graph_id = parse_number<std::size_t>(require("graph"), "graph");
    r.index = parse_number<std::uint64_t>(require("index"), "index");
    const std::string object = require("object");
    if (object.rfind("sig:", 0) == 0) {
        r.kind = ObjectKind::Signature;
        r.sigma = object.substr(4);
    } else if (object.rfind("lists:", 0) == 0) {
        r.kind = ObjectKind::Lists;
        r.lists = object.substr(6);
    } else if (object != "-") {
        bad("unknown object '" + object + "'");
    }
    r.k = parse_number<int>(require("k"), "k");
    r.outcome = parse_outcome(require("outcome"));
    if (auto sigma = take("sigma")) r.sigma = *sigma;
    if (auto cls = take("class")) r.class_index = parse_number<std::uint64_t>(*cls, "class");
    r.nodes = parse_number<std::uint64_t>(require("nodes"), "nodes");
    if (auto ms = take("ms")) r.elapsed_ms = std::stod(*ms);
    if (auto cert = take("cert")) {
        r.certificate = *cert;
        const auto digest = take("digest");
        if (!digest) bad("cert without digest");
        r.digest = *digest;
    }
    if (auto reason = take("reason")) r.reason = *reason;
    if (auto n = take("n")) {
        r.graph = parse_edge_list(parse_number<int>(*n, "n"), require("edges"));
    }
    if (!fields.empty()) bad("unknown key '" + fields.begin()->first + "'");
    return r;
}

}  // namespace sigcol
