#include "sigcol/signed.hpp"

#include <deque>

#include "sigcol/error.hpp"

namespace sigcol {

Signature::Signature(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_) {
        if (s != 1 && s != -1) {
            throw Error(ErrorKind::FormatError, "sign must be +1 or -1, got " + std::to_string(s));
        }
    }
}

std::string Signature::to_string() const {
    std::string out;
    out.reserve(signs_.size());
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

Signature Signature::parse(std::string_view text) {
    std::vector<int> signs;
    signs.reserve(text.size());
    for (char c : text) {
        if (c == '+') {
            signs.push_back(1);
        } else if (c == '-') {
            signs.push_back(-1);
        } else {
            throw Error(ErrorKind::FormatError, std::string("bad sign character '") + c + "'");
        }
    }
    return Signature(std::move(signs));
}

SignedGraph::SignedGraph(Graph graph, Signature sigma)
    : graph_(std::move(graph)), sigma_(std::move(sigma)) {
    if (sigma_.size() != graph_.edge_count()) {
        throw Error(ErrorKind::GraphMismatch, "signature has " + std::to_string(sigma_.size()) +
                                                  " signs for " +
                                                  std::to_string(graph_.edge_count()) + " edges");
    }
}

Signature all_positive(const Graph& g) {
    return Signature(std::vector<int>(g.edge_count(), 1));
}

SignedGraph switch_at(const SignedGraph& sg, std::span<const Vertex> s) {
    const Graph& g = sg.graph();
    std::vector<bool> in_s(g.vertex_count(), false);
    for (Vertex v : s) {
        if (v < 0 || v >= g.vertex_count()) {
            throw Error(ErrorKind::VertexOutOfRange, "switch vertex " + std::to_string(v));
        }
        in_s[v] = true;
    }
    Signature sigma = sg.sigma();
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (in_s[edges[i].u] != in_s[edges[i].v]) sigma.flip(i);
    }
    return SignedGraph(g, std::move(sigma));
}

SignatureClasses::SignatureClasses(const Graph& g) : graph_(&g) {
    const int n = g.vertex_count();
    std::vector<bool> visited(n, false);
    std::vector<bool> in_forest(g.edge_count(), false);
    for (Vertex root = 0; root < n; ++root) {
        if (visited[root]) continue;
        ++components_;
        visited[root] = true;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(x)) {
                if (visited[inc.neighbour]) continue;
                visited[inc.neighbour] = true;
                in_forest[inc.edge] = true;
                bfs_order_.push_back({inc.neighbour, x, inc.edge});
                queue.push_back(inc.neighbour);
            }
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        (in_forest[e] ? forest_ : cotree_).push_back(e);
    }
    if (cotree_.size() > 62) {
        throw Error(ErrorKind::TooManyClasses,
                    "cycle rank " + std::to_string(cotree_.size()) + " exceeds 62");
    }
}

Signature SignatureClasses::at(std::uint64_t index) const {
    std::vector<int> signs(graph_->edge_count(), 1);
    for (std::size_t i = 0; i < cotree_.size(); ++i) {
        if ((index >> i) & 1U) signs[cotree_[i]] = -1;
    }
    return Signature(std::move(signs));
}

std::uint64_t SignatureClasses::class_of(const Signature& sigma) const {
    // Switch so that every forest edge becomes positive, then read the cotree.
    std::vector<int> flipped(graph_->vertex_count(), 0);
    for (const auto& step : bfs_order_) {
        flipped[step.child] = flipped[step.parent] ^ (sigma[step.edge] < 0 ? 1 : 0);
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < cotree_.size(); ++i) {
        const Edge& e = graph_->edge(cotree_[i]);
        const bool negative = (sigma[cotree_[i]] < 0) != (flipped[e.u] != flipped[e.v]);
        if (negative) index |= std::uint64_t{1} << i;
    }
    return index;
}

std::vector<Signature> enumerate_signature_classes(const Graph& g) {
    SignatureClasses classes(g);
    std::vector<Signature> out;
    out.reserve(classes.count());
    for (std::uint64_t i = 0; i < classes.count(); ++i) out.push_back(classes.at(i));
    return out;
}

bool is_switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (!(a.graph() == b.graph())) {
        throw Error(ErrorKind::GraphMismatch, "signed graphs have different underlying graphs");
    }
    const int n = a.graph().vertex_count();
    if (n > 24) {
        throw Error(ErrorKind::BudgetExceeded, "brute-force switching test limited to n <= 24");
    }
    if (n == 0) return a.sigma() == b.sigma();
    const auto edges = a.graph().edges();
    const std::uint64_t sets = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < sets; ++mask) {
        // Vertex v (v >= 1) is in the switching set iff bit v-1 is set.
        auto in_s = [mask](Vertex v) { return v > 0 && ((mask >> (v - 1)) & 1U); };
        bool match = true;
        for (std::size_t i = 0; i < edges.size() && match; ++i) {
            const int crossing = in_s(edges[i].u) != in_s(edges[i].v) ? -1 : 1;
            match = a.sign(i) * crossing == b.sign(i);
        }
        if (match) return true;
    }
    return false;
}

}  // namespace sigcol
