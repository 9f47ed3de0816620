#include "sigcol/reduction.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <map>

namespace sigcol {

namespace {

void require_total(const Graph& g, const ListAssignment& lists) {
    if (lists.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw Error(ErrorKind::MissingList, "list assignment covers " +
                                                std::to_string(lists.size()) + " of " +
                                                std::to_string(g.vertex_count()) + " vertices");
    }
}

std::string edge_name(const Edge& e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

int parse_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::FormatError, "bad integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

ListAssignment::ListAssignment(std::vector<ColourPair> lists) : lists_(std::move(lists)) {
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        const auto& p = lists_[v];
        if (p.low < 1 || p.low >= p.high) {
            throw Error(ErrorKind::InvalidList,
                        "vertex " + std::to_string(v) + ": list {" + std::to_string(p.low) + "," +
                            std::to_string(p.high) + "} needs 1 <= a < b");
        }
    }
}

std::string ListAssignment::to_string() const {
    std::string out;
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        if (v) out += ',';
        out += std::to_string(lists_[v].low) + '/' + std::to_string(lists_[v].high);
    }
    return out;
}

ListAssignment ListAssignment::parse(std::string_view text) {
    std::vector<ColourPair> lists;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto slash = item.find('/');
        if (slash == std::string_view::npos) {
            throw Error(ErrorKind::FormatError, "list item '" + std::string(item) + "' lacks '/'");
        }
        lists.push_back({parse_int(item.substr(0, slash)), parse_int(item.substr(slash + 1))});
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return ListAssignment(std::move(lists));
}

Signature build_signature(const Graph& g, const ListAssignment& lists) {
    require_total(g, lists);
    std::vector<int> signs;
    signs.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const auto& lu = lists[e.u];
        const auto& lv = lists[e.v];
        const bool first = lu.low == lv.high;
        const bool second = lv.low == lu.high;
        // Both would need lu.low = lv.high > lv.low = lu.high > lu.low.
        assert(!(first && second));
        signs.push_back(first || second ? -1 : 1);
    }
    return Signature(std::move(signs));
}

ListColouring derive_phi(const SignedColouring& f, const ListAssignment& lists) {
    if (f.colour.size() != lists.size()) {
        throw Error(ErrorKind::MissingList, "colouring and list assignment sizes differ");
    }
    ListColouring out;
    out.phi.reserve(f.colour.size());
    for (std::size_t v = 0; v < f.colour.size(); ++v) {
        const int c = f.colour[v];
        if (c == 0 || c < -2 || c > 2) {
            throw Error(ErrorKind::WrongColourSet, "vertex " + std::to_string(v) + " has colour " +
                                                       std::to_string(c) +
                                                       ", expected one of -2,-1,1,2");
        }
        out.phi.push_back(c > 0 ? lists[static_cast<Vertex>(v)].high
                                : lists[static_cast<Vertex>(v)].low);
    }
    return out;
}

BipartiteWitness psi_witness(const SignedGraph& sg, const SignedColouring& f,
                             const ListColouring& phi) {
    const Graph& g = sg.graph();
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (f.colour.size() != n || phi.phi.size() != n) {
        throw Error(ErrorKind::PartialAssignment, "colouring sizes do not match the graph");
    }

    std::map<int, ColourClassWitness> classes;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& cls = classes[phi.phi[v]];
        cls.colour = phi.phi[v];
        cls.members.push_back(v);
        cls.side.push_back(f.colour[v] < 0 ? -f.colour[v] : f.colour[v]);
    }

    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (phi.phi[e.u] != phi.phi[e.v]) continue;
        const bool same_end = (f.colour[e.u] > 0) == (f.colour[e.v] > 0);
        const bool positive = sg.sign(i) > 0;
        if (positive != same_end) {
            throw WitnessFailureError(
                e, "edge " + edge_name(e) + " in class " + std::to_string(phi.phi[e.u]) + " is " +
                       (positive ? "positive" : "negative") +
                       " but its ends took " + (same_end ? "the same" : "opposite") +
                       " list ends; phi was not derived from this signature (implementation bug)");
        }
        const int psi_u = std::abs(f.colour[e.u]);
        const int psi_v = std::abs(f.colour[e.v]);
        if (psi_u == psi_v) {
            throw WitnessFailureError(
                e, "psi(" + std::to_string(e.u) + ") = psi(" + std::to_string(e.v) + ") = " +
                       std::to_string(psi_u) + " on edge " + edge_name(e) + " in class " +
                       std::to_string(phi.phi[e.u]) +
                       "; f is not a proper signed colouring (implementation bug)");
        }
    }

    BipartiteWitness witness;
    witness.classes.reserve(classes.size());
    for (auto& [colour, cls] : classes) witness.classes.push_back(std::move(cls));
    return witness;
}

ReductionResult list_colour_via_signature(const Graph& g, const ListAssignment& lists,
                                          const SearchLimits& limits) {
    ReductionResult result;
    result.sigma = build_signature(g, lists);
    const SignedGraph sg(g, result.sigma);
    auto solved = solve_k(sg, 4, limits);
    result.nodes = solved.nodes;
    switch (solved.verdict) {
    case Verdict::Aborted:
        result.status = ReductionStatus::Aborted;
        return result;
    case Verdict::Unsatisfiable:
        result.status = ReductionStatus::SignatureUncolourable;
        return result;
    case Verdict::Satisfiable:
        break;
    }
    result.phi = derive_phi(*solved.colouring, lists);
    result.witness = psi_witness(sg, *solved.colouring, *result.phi);
    result.f = std::move(solved.colouring);
    result.status = ReductionStatus::Coloured;
    return result;
}

std::uint64_t for_each_reduction(
    const Graph& g, const ListAssignment& lists,
    const std::function<bool(const SignedColouring&, const ListColouring&,
                             const BipartiteWitness&)>& visit) {
    const SignedGraph sg(g, build_signature(g, lists));
    return for_each_colouring(sg, 4, [&](const SignedColouring& f) {
        const auto phi = derive_phi(f, lists);
        const auto witness = psi_witness(sg, f, phi);
        return visit(f, phi, witness);
    });
}

ListAssignment relabel_colours(const ListAssignment& lists, std::span<const int> mapping) {
    std::vector<ColourPair> out;
    out.reserve(lists.size());
    for (const auto& p : lists.lists()) {
        if (p.high >= static_cast<int>(mapping.size())) {
            throw Error(ErrorKind::InvalidList,
                        "colour " + std::to_string(p.high) + " outside the relabelling");
        }
        const int a = mapping[p.low];
        const int b = mapping[p.high];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return ListAssignment(std::move(out));
}

}  // namespace sigcol
