#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sigcol/graph.hpp"

namespace sigcol {

/// Per-edge signs (+1 / -1), indexed by the parent graph's edge indices.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<int> signs);

    std::size_t size() const noexcept { return signs_.size(); }
    int operator[](std::size_t edge) const { return signs_[edge]; }
    std::span<const int> signs() const noexcept { return signs_; }
    void flip(std::size_t edge) { signs_.at(edge) = -signs_.at(edge); }

    /// '+'/'-' per edge in edge-index order; the report serialization.
    std::string to_string() const;
    static Signature parse(std::string_view text);

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::vector<int> signs_;
};

class SignedGraph {
public:
    /// Throws GraphMismatch when sigma's length differs from the edge count.
    SignedGraph(Graph graph, Signature sigma);

    const Graph& graph() const noexcept { return graph_; }
    const Signature& sigma() const noexcept { return sigma_; }
    int sign(std::size_t edge) const { return sigma_[edge]; }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    Graph graph_;
    Signature sigma_;
};

Signature all_positive(const Graph& g);

/// Negates exactly the edges with one endpoint in `s`.
SignedGraph switch_at(const SignedGraph& sg, std::span<const Vertex> s);

/// Switching classes of signatures on a fixed graph.
///
/// A spanning forest is grown by BFS from the lowest-index vertex of each
/// component; class representatives are +1 on every forest edge and range
/// over all sign patterns on the remaining ("cotree") edges. Bit i of a class
/// index is set iff cotree edge i (in edge-index order) is negative.
class SignatureClasses {
public:
    explicit SignatureClasses(const Graph& g);

    /// 2^(|E| - n + c).
    std::uint64_t count() const noexcept { return std::uint64_t{1} << cotree_.size(); }
    Signature at(std::uint64_t index) const;
    /// Index of the class containing `sigma`.
    std::uint64_t class_of(const Signature& sigma) const;

    int components() const noexcept { return components_; }
    std::span<const std::size_t> forest_edges() const noexcept { return forest_; }
    std::span<const std::size_t> cotree_edges() const noexcept { return cotree_; }

private:
    struct TreeStep {
        Vertex child;
        Vertex parent;
        std::size_t edge;
    };

    const Graph* graph_;
    int components_ = 0;
    std::vector<std::size_t> forest_;
    std::vector<std::size_t> cotree_;
    std::vector<TreeStep> bfs_order_;
};

/// One representative per switching class, in class-index order.
/// Throws TooManyClasses when the cycle rank exceeds 62.
std::vector<Signature> enumerate_signature_classes(const Graph& g);

/// Brute force over the 2^(n-1) switching sets that exclude vertex 0.
/// Throws GraphMismatch for different underlying graphs and BudgetExceeded
/// for n > 24.
bool is_switching_equivalent(const SignedGraph& a, const SignedGraph& b);

}  // namespace sigcol
