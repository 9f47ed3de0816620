#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace sigcol {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) in input order, so edge index i is
/// stable for the lifetime of the graph. Each adjacency entry carries the
/// index of the edge it came from. Immutable after construction.
class Graph {
public:
    struct Incidence {
        Vertex neighbour;
        std::size_t edge;
    };

    Graph() = default;

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }
    std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    friend Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
};

/// Throws Error{LoopEdge | VertexOutOfRange | DuplicateEdge}. Duplicates are
/// detected after normalization, so (1,0) duplicates (0,1).
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

/// Vertex subset of a parent graph together with the parent edges it induces.
class ColourClassSubgraph {
public:
    const Graph& parent() const noexcept { return *parent_; }
    std::span<const Vertex> members() const noexcept { return members_; }
    /// Indices into parent().edges().
    std::span<const std::size_t> induced_edges() const noexcept { return induced_; }
    bool contains(Vertex v) const { return in_set_.at(v); }

private:
    friend ColourClassSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

    const Graph* parent_ = nullptr;
    std::vector<Vertex> members_;
    std::vector<bool> in_set_;
    std::vector<std::size_t> induced_;
};

/// Members are sorted and deduplicated. The parent must outlive the result.
ColourClassSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> members);

struct Bipartition {
    /// side[v] in {0,1} for members, -1 for vertices outside the subset.
    std::vector<int> side;
};

struct OddCycle {
    /// Closed walk v0..v_{m-1} (m odd, m >= 3); v_{m-1} is adjacent to v0.
    std::vector<Vertex> cycle;
};

using BipartitionResult = std::variant<Bipartition, OddCycle>;

/// BFS two-colouring of the induced subgraph, or an odd cycle certificate.
BipartitionResult is_bipartite(const ColourClassSubgraph& sub);

/// Necessary condition for planarity: n < 3 or |E| <= 3n - 6.
bool euler_planarity_bound(const Graph& g);

}  // namespace sigcol
