#include "sigcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "sigcol/error.hpp"

namespace sigcol {

namespace {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    }
}

}  // namespace

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& adj = adjacency_.at(u);
    return std::any_of(adj.begin(), adj.end(),
                       [v](const Incidence& inc) { return inc.neighbour == v; });
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) {
        throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
    }
    Graph g;
    g.n_ = n;
    g.adjacency_.resize(n);
    g.edges_.reserve(edges.size());
    std::set<Edge> seen;
    for (auto [a, b] : edges) {
        check_vertex(n, a);
        check_vertex(n, b);
        if (a == b) {
            throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
        }
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert(e).second) {
            throw Error(ErrorKind::DuplicateEdge,
                        "duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        const std::size_t idx = g.edges_.size();
        g.edges_.push_back(e);
        g.adjacency_[e.u].push_back({e.v, idx});
        g.adjacency_[e.v].push_back({e.u, idx});
    }
    return g;
}

ColourClassSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members) {
    ColourClassSubgraph sub;
    sub.parent_ = &g;
    sub.in_set_.assign(g.vertex_count(), false);
    for (Vertex v : members) {
        check_vertex(g.vertex_count(), v);
        sub.in_set_[v] = true;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (sub.in_set_[v]) sub.members_.push_back(v);
    }
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (sub.in_set_[edges[i].u] && sub.in_set_[edges[i].v]) sub.induced_.push_back(i);
    }
    return sub;
}

BipartitionResult is_bipartite(const ColourClassSubgraph& sub) {
    const Graph& g = sub.parent();
    std::vector<int> side(g.vertex_count(), -1);
    std::vector<Vertex> parent(g.vertex_count(), -1);
    std::vector<int> depth(g.vertex_count(), 0);

    for (Vertex root : sub.members()) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (const auto& inc : g.incident(x)) {
                const Vertex y = inc.neighbour;
                if (!sub.contains(y)) continue;
                if (side[y] == -1) {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    // Both tree paths back to the lowest common ancestor plus
                    // the edge x-y form an odd cycle.
                    std::vector<Vertex> left{x};
                    std::vector<Vertex> right{y};
                    Vertex a = x;
                    Vertex b = y;
                    while (depth[a] > depth[b]) left.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) right.push_back(b = parent[b]);
                    while (a != b) {
                        left.push_back(a = parent[a]);
                        right.push_back(b = parent[b]);
                    }
                    right.pop_back();
                    OddCycle oc;
                    oc.cycle.assign(left.rbegin(), left.rend());
                    oc.cycle.insert(oc.cycle.end(), right.begin(), right.end());
                    return oc;
                }
            }
        }
    }
    return Bipartition{std::move(side)};
}

bool euler_planarity_bound(const Graph& g) {
    const long n = g.vertex_count();
    if (n < 3) return true;
    return static_cast<long>(g.edge_count()) <= 3 * n - 6;
}

}  // namespace sigcol
