#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigcol/graph.hpp"
#include "sigcol/signed.hpp"
#include "sigcol/solver.hpp"
#include "sigcol/error.hpp"

namespace sigcol {

/// A 2-list {low, high} of positive colours, low < high.
struct ColourPair {
    int low = 0;
    int high = 0;

    friend bool operator==(const ColourPair&, const ColourPair&) = default;
};

/// One 2-list per vertex. Colours are compared by integer value, which is
/// the linear order the signature construction relies on.
class ListAssignment {
public:
    ListAssignment() = default;
    /// Throws InvalidList unless 1 <= low < high for every pair.
    explicit ListAssignment(std::vector<ColourPair> lists);

    std::size_t size() const noexcept { return lists_.size(); }
    const ColourPair& operator[](Vertex v) const { return lists_.at(v); }
    std::span<const ColourPair> lists() const noexcept { return lists_; }

    /// "a/b,c/d,..." in vertex order; used as the report object id.
    std::string to_string() const;
    static ListAssignment parse(std::string_view text);

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<ColourPair> lists_;
};

struct ListColouring {
    std::vector<int> phi;

    friend bool operator==(const ListColouring&, const ListColouring&) = default;
};

struct ColourClassWitness {
    int colour = 0;
    std::vector<Vertex> members;
    /// psi(v) = |f(v)| in {1, 2}, parallel to members.
    std::vector<int> side;
};

struct BipartiteWitness {
    /// One entry per colour used by phi, in increasing colour order.
    std::vector<ColourClassWitness> classes;
};

/// Raised when psi is not a proper 2-colouring of some class, or when an
/// edge inside a class contradicts the sign pattern the construction forces.
class WitnessFailureError : public Error {
public:
    WitnessFailureError(Edge edge, const std::string& message)
        : Error(ErrorKind::WitnessFailure, message), edge_(edge) {}

    Edge edge() const noexcept { return edge_; }

private:
    Edge edge_;
};

/// sigma(uv) = -1 iff min L(u) = max L(v) or min L(v) = max L(u).
/// Throws MissingList when L does not cover every vertex.
Signature build_signature(const Graph& g, const ListAssignment& lists);

/// phi(v) = max L(v) when f(v) > 0, min L(v) when f(v) < 0.
/// Throws WrongColourSet unless every f(v) is in {-2, -1, 1, 2}.
ListColouring derive_phi(const SignedColouring& f, const ListAssignment& lists);

/// Builds psi = |f| on every colour class of phi and checks it edge by edge.
/// Within a class, a positive edge must join two vertices that took the same
/// end of their lists (f signs agree) and a negative edge two that took
/// opposite ends (f signs differ); in both cases |f(u)| != |f(v)| follows
/// from f being proper. Throws WitnessFailureError otherwise.
BipartiteWitness psi_witness(const SignedGraph& sg, const SignedColouring& f,
                             const ListColouring& phi);

enum class ReductionStatus {
    Coloured,
    /// (G, sigma) has no signed 4-colouring: a counterexample candidate.
    SignatureUncolourable,
    /// The solver hit its node or time limit.
    Aborted,
};

struct ReductionResult {
    ReductionStatus status = ReductionStatus::Aborted;
    Signature sigma;
    std::optional<SignedColouring> f;
    std::optional<ListColouring> phi;
    std::optional<BipartiteWitness> witness;
    std::uint64_t nodes = 0;
};

/// build_signature -> solve_k(4) -> derive_phi -> psi_witness.
ReductionResult list_colour_via_signature(const Graph& g, const ListAssignment& lists,
                                          const SearchLimits& limits = {});

/// Runs derive_phi and psi_witness for every proper 4-colouring of
/// (G, build_signature(G, L)); `visit` may stop early by returning false.
/// Returns the number of colourings checked.
std::uint64_t for_each_reduction(
    const Graph& g, const ListAssignment& lists,
    const std::function<bool(const SignedColouring&, const ListColouring&,
                             const BipartiteWitness&)>& visit);

/// Applies a colour relabelling (mapping[c] is the new colour for c, index 0
/// unused) and re-sorts each pair.
ListAssignment relabel_colours(const ListAssignment& lists, std::span<const int> mapping);

}  // namespace sigcol
