#pragma once

// Brute-force reference implementations for tests. Nothing here calls the
// search, encoding or reduction code it is used to check.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigcol/graph.hpp"
#include "sigcol/signed.hpp"
#include "sigcol/solver.hpp"

namespace sigcol::oracle {

/// Every labelled simple graph on n vertices; edge (i,j) present iff bit p is
/// set, pairs p enumerated as (0,1),(0,2),...,(n-2,n-1).
std::vector<Graph> all_labelled_graphs(int n);

/// One graph per isomorphism class on n vertices (n <= 7).
std::vector<Graph> nonisomorphic_graphs(int n);

Graph from_pairs(int n, std::vector<std::pair<int, int>> edges);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Signature whose bit e (of `bits`) selects a negative edge e.
Signature signature_from_bits(const Graph& g, std::uint64_t bits);

/// Smallest c such that a proper c-colouring exists (plain colouring).
int ordinary_chromatic_number(const Graph& g);

/// Colours {-q..q} minus 0 for even k, built independently of ColourSet.
std::vector<int> reference_colours(int k);

/// Exhaustive search for f with f(x) != sigma(e) f(y).
bool signed_colourable(const SignedGraph& sg, int k);
/// All proper signed k-colourings.
std::vector<std::vector<int>> all_signed_colourings(const SignedGraph& sg, int k);

/// Enumerates all 2^|S| side assignments.
bool bipartite_by_enumeration(const Graph& g, const std::vector<Vertex>& members);

/// Switching orbits of all 2^|E| signatures, by applying all 2^n switches.
std::uint64_t switching_orbit_count(const Graph& g);

/// Every simple cycle, each once, as a vertex sequence.
std::vector<std::vector<Vertex>> simple_cycles(const Graph& g);

/// Independent graph6 encoder (test support only).
std::string encode_graph6(const Graph& g);

/// Clauses over variables 1..vars.
bool dpll_satisfiable(int vars, const std::vector<std::vector<int>>& clauses);
/// A satisfying assignment as DIMACS literals (free variables false).
std::optional<std::vector<int>> dpll_model(int vars, const std::vector<std::vector<int>>& clauses);
bool truth_table_satisfiable(int vars, const std::vector<std::vector<int>>& clauses);

}  // namespace sigcol::oracle
