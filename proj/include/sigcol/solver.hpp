#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigcol/signed.hpp"

namespace sigcol {

/// Colours available to a signed k-colouring: {-q..-1, 1..q} for k = 2q and
/// {-q..-1, 0, 1..q} for k = 2q+1, in increasing order. Since the list is
/// symmetric, the negation of values()[i] is values()[k-1-i].
class ColourSet {
public:
    /// Throws InvalidK for k < 1.
    explicit ColourSet(int k);

    int k() const noexcept { return static_cast<int>(values_.size()); }
    std::span<const int> values() const noexcept { return values_; }
    int value(int index) const { return values_.at(index); }
    int negated_index(int index) const noexcept { return k() - 1 - index; }
    bool contains(int value) const noexcept;
    /// Throws WrongColourSet when `value` is not in the set.
    int index_of(int value) const;

private:
    std::vector<int> values_;
};

ColourSet colour_set(int k);

struct SignedColouring {
    int k = 0;
    /// Colour value (not index) per vertex.
    std::vector<int> colour;

    friend bool operator==(const SignedColouring&, const SignedColouring&) = default;
};

/// True iff every colour lies in colour_set(f.k) and f(x) != sigma(e) f(y)
/// on every edge. Throws PartialAssignment when f does not cover every vertex.
bool is_proper(const SignedGraph& sg, const SignedColouring& f);

struct SearchLimits {
    std::uint64_t max_nodes = 0;  ///< 0 means unlimited
    std::chrono::milliseconds max_time{0};  ///< 0 means unlimited
};

enum class Verdict { Satisfiable, Unsatisfiable, Aborted };

struct SolveResult {
    Verdict verdict = Verdict::Unsatisfiable;
    std::optional<SignedColouring> colouring;
    std::uint64_t nodes = 0;
};

/// Exact backtracking search for a signed k-colouring.
///
/// Branches on the uncoloured vertex with the fewest remaining colours
/// (ties: higher degree, then lower index) and forward-checks neighbours'
/// domains. Because f -> -f maps proper colourings to proper colourings, the
/// first branching vertex only tries colours >= 0. Returned colourings are
/// re-checked with is_proper before being reported.
SolveResult solve_k(const SignedGraph& sg, int k, const SearchLimits& limits = {});

/// Visits every proper k-colouring (no symmetry cut) until `visit` returns
/// false. Returns the number of colourings visited.
std::uint64_t for_each_colouring(const SignedGraph& sg, int k,
                                 const std::function<bool(const SignedColouring&)>& visit);

/// Smallest k >= 1 admitting a colouring, scanning k upward; 0 when n = 0.
int chromatic_number(const SignedGraph& sg);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 10'000'000;

/// Enumerates all k^n assignments. Throws BudgetExceeded when k^n > budget.
SolveResult brute_force_k(const SignedGraph& sg, int k,
                          std::uint64_t budget = kDefaultBruteForceBudget);

struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<int>> clauses;

    /// "p cnf <vars> <clauses>" then one zero-terminated line per clause.
    std::string to_dimacs() const;
};

/// DIMACS variable for vertex v taking the colour at `colour_index`.
constexpr int cnf_variable(int v, int colour_index, int k) { return v * k + colour_index + 1; }

/// Clause order: per vertex its at-least-one clause followed by its pairwise
/// at-most-one clauses; then per edge (edge-index order) one conflict clause
/// per colour c, forbidding f(u) = c together with f(v) = sigma(e) c.
CnfFormula encode_cnf(const SignedGraph& sg, int k);

/// Reads a colouring off a model given as DIMACS literals; variables that do
/// not appear count as false. Throws AmbiguousModel when a vertex has zero or
/// several true colour variables.
SignedColouring decode_cnf_model(std::span<const int> literals, const SignedGraph& sg, int k);

}  // namespace sigcol
