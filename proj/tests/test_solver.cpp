#include <doctest.h>

#include <random>

#include "sigcol/error.hpp"
#include "sigcol/solver.hpp"
#include "support/oracles.hpp"

using namespace sigcol;

namespace {

SignedGraph signed_graph(const Graph& g, std::uint64_t bits) {
    return SignedGraph(g, oracle::signature_from_bits(g, bits));
}

const Graph k2 = oracle::complete_graph(2);
const Graph triangle = oracle::complete_graph(3);

}  // namespace

TEST_CASE("colour_set") {
    auto values = [](int k) {
        const ColourSet set = colour_set(k);
        return std::vector<int>(set.values().begin(), set.values().end());
    };
    CHECK(values(4) == std::vector<int>{-2, -1, 1, 2});
    CHECK(values(1) == std::vector<int>{0});
    CHECK(values(3) == std::vector<int>{-1, 0, 1});
    CHECK(values(2) == std::vector<int>{-1, 1});
    for (int k = 1; k <= 9; ++k) {
        CHECK(values(k) == oracle::reference_colours(k));
        const ColourSet set(k);
        for (int i = 0; i < k; ++i) CHECK(set.value(set.negated_index(i)) == -set.value(i));
    }
    try {
        colour_set(0);
        FAIL("expected InvalidK");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidK);
    }
    CHECK_THROWS_AS(colour_set(4).index_of(0), Error);
}

TEST_CASE("is_proper examples") {
    CHECK(is_proper(signed_graph(k2, 0), {2, {1, -1}}));
    CHECK(is_proper(signed_graph(k2, 1), {2, {1, 1}}));
    CHECK_FALSE(is_proper(signed_graph(k2, 1), {2, {1, -1}}));
    // 0 = -0 conflicts across either sign.
    CHECK_FALSE(is_proper(signed_graph(k2, 0), {3, {0, 0}}));
    CHECK_FALSE(is_proper(signed_graph(k2, 1), {3, {0, 0}}));
    // Colours outside the set are rejected.
    CHECK_FALSE(is_proper(signed_graph(k2, 0), {2, {2, 1}}));
    try {
        is_proper(signed_graph(k2, 0), {2, {1}});
        FAIL("expected PartialAssignment");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PartialAssignment);
    }
}

TEST_CASE("solve_k examples") {
    auto sat = [](const SignedGraph& sg, int k) {
        const auto r = solve_k(sg, k);
        CHECK(r.verdict != Verdict::Aborted);
        if (r.colouring) CHECK(is_proper(sg, *r.colouring));
        CHECK((r.verdict == Verdict::Satisfiable) == oracle::signed_colourable(sg, k));
        return r.verdict == Verdict::Satisfiable;
    };
    CHECK(sat(signed_graph(k2, 0), 2));
    CHECK_FALSE(sat(signed_graph(triangle, 0), 2));
    CHECK(sat(signed_graph(triangle, 0), 3));
    CHECK(sat(signed_graph(triangle, 0b100), 2));
    // The colouring in the worked example: both ends of the negative edge 1.
    CHECK(is_proper(signed_graph(triangle, 0b100), {2, {-1, 1, 1}}));
}

TEST_CASE("chromatic_number examples") {
    CHECK(chromatic_number(signed_graph(oracle::from_pairs(0, {}), 0)) == 0);
    CHECK(chromatic_number(signed_graph(oracle::from_pairs(1, {}), 0)) == 1);
    CHECK(chromatic_number(signed_graph(k2, 0)) == 2);
    CHECK(chromatic_number(signed_graph(k2, 1)) == 2);
    CHECK(chromatic_number(signed_graph(triangle, 0)) == 3);
    CHECK(chromatic_number(signed_graph(triangle, 0b111)) == 2);
}

TEST_CASE("brute_force_k examples") {
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        for (int k = 1; k <= 4; ++k) {
            const auto sg = signed_graph(triangle, bits);
            CHECK(brute_force_k(sg, k).verdict == solve_k(sg, k).verdict);
        }
    }
    CHECK(brute_force_k(signed_graph(oracle::from_pairs(0, {}), 0), 1).verdict ==
          Verdict::Satisfiable);
    CHECK(brute_force_k(signed_graph(oracle::complete_graph(4), 0), 3).verdict ==
          Verdict::Unsatisfiable);
    try {
        brute_force_k(signed_graph(oracle::path_graph(12), 0), 4);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("search limits abort instead of guessing") {
    const auto k5 = signed_graph(oracle::complete_graph(5), 0);
    SearchLimits limits;
    limits.max_nodes = 1;
    const auto r = solve_k(k5, 4, limits);
    CHECK(r.verdict == Verdict::Aborted);
    CHECK_FALSE(r.colouring);
    CHECK(solve_k(k5, 4).verdict == Verdict::Unsatisfiable);
}

TEST_CASE("solver agrees with the reference enumerator on small graphs") {
    for (int n = 0; n <= 5; ++n) {
        const auto graphs = oracle::nonisomorphic_graphs(n);
        for (const Graph& g : graphs) {
            const SignatureClasses classes(g);
            for (std::uint64_t c = 0; c < classes.count(); ++c) {
                const SignedGraph sg(g, classes.at(c));
                for (int k = 1; k <= 4; ++k) {
                    const auto r = solve_k(sg, k);
                    CHECK((r.verdict == Verdict::Satisfiable) == oracle::signed_colourable(sg, k));
                    if (r.colouring) CHECK(is_proper(sg, *r.colouring));
                }
            }
        }
    }
}

TEST_CASE("for_each_colouring visits every proper colouring") {
    for (const Graph& g : oracle::nonisomorphic_graphs(4)) {
        for (std::uint64_t bits = 0; bits < (1ULL << g.edge_count()); bits += 3) {
            const auto sg = signed_graph(g, bits);
            for (int k = 1; k <= 4; ++k) {
                std::vector<std::vector<int>> seen;
                const auto count = for_each_colouring(sg, k, [&](const SignedColouring& f) {
                    seen.push_back(f.colour);
                    return true;
                });
                auto expected = oracle::all_signed_colourings(sg, k);
                std::sort(seen.begin(), seen.end());
                std::sort(expected.begin(), expected.end());
                CHECK(count == expected.size());
                CHECK(seen == expected);
            }
        }
    }
}

TEST_CASE("monotonicity in k on the tested range") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
            const SignatureClasses classes(g);
            for (std::uint64_t c = 0; c < classes.count(); ++c) {
                const SignedGraph sg(g, classes.at(c));
                for (int k = 1; k <= 3; ++k) {
                    if (brute_force_k(sg, k).verdict == Verdict::Satisfiable) {
                        CHECK(brute_force_k(sg, k + 1).verdict == Verdict::Satisfiable);
                    }
                }
            }
        }
    }
}

TEST_CASE("all-positive signatures give the ordinary chromatic number") {
    for (int n = 0; n <= 6; ++n) {
        for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
            CHECK(chromatic_number(SignedGraph(g, all_positive(g))) ==
                  oracle::ordinary_chromatic_number(g));
        }
    }
}

TEST_CASE("chromatic number is invariant under switching") {
    std::mt19937 rng(3);
    const auto graphs = oracle::all_labelled_graphs(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph& g = graphs[rng() % graphs.size()];
        const auto sg = signed_graph(g, rng() & ((1ULL << g.edge_count()) - 1));
        std::vector<Vertex> s;
        for (int v = 0; v < 5; ++v)
            if (rng() % 2) s.push_back(v);
        CHECK(chromatic_number(switch_at(sg, s)) == chromatic_number(sg));
    }
}

TEST_CASE("encode_cnf golden output") {
    CHECK(encode_cnf(signed_graph(k2, 0), 2).to_dimacs() ==
          "p cnf 4 6\n1 2 0\n-1 -2 0\n3 4 0\n-3 -4 0\n-1 -3 0\n-2 -4 0\n");
    CHECK(encode_cnf(signed_graph(k2, 1), 2).to_dimacs() ==
          "p cnf 4 6\n1 2 0\n-1 -2 0\n3 4 0\n-3 -4 0\n-1 -4 0\n-2 -3 0\n");
    const auto odd = encode_cnf(signed_graph(k2, 1), 3);
    CHECK(odd.variables == 6);
    // k=3: ALO + 3 AMO per vertex, 3 conflict clauses; colour 0 pairs with itself.
    CHECK(odd.clauses.size() == 2 * 4 + 3);
    CHECK(odd.clauses[2 * 4 + 1] == std::vector<int>{-2, -5});
}

TEST_CASE("test DPLL agrees with truth tables") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int vars = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<int>> clauses(rng() % 25);
        for (auto& clause : clauses) {
            clause.resize(1 + rng() % 3);
            for (int& lit : clause) lit = (1 + static_cast<int>(rng() % vars)) * (rng() % 2 ? 1 : -1);
        }
        CHECK(oracle::dpll_satisfiable(vars, clauses) ==
              oracle::truth_table_satisfiable(vars, clauses));
    }
}

TEST_CASE("CNF satisfiability matches the solver") {
    for (int n = 0; n <= 4; ++n) {
        for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
            for (std::uint64_t bits = 0; bits < (1ULL << g.edge_count()); ++bits) {
                const auto sg = signed_graph(g, bits);
                for (int k = 1; k <= 4; ++k) {
                    const auto cnf = encode_cnf(sg, k);
                    CHECK(oracle::dpll_satisfiable(cnf.variables, cnf.clauses) ==
                          (solve_k(sg, k).verdict == Verdict::Satisfiable));
                }
            }
        }
    }
}

TEST_CASE("decode_cnf_model") {
    const auto pos = signed_graph(k2, 0);
    const std::vector<int> model{-1, 2, 3, -4};  // x(0, 1), x(1, -1)
    CHECK(decode_cnf_model(model, pos, 2) == SignedColouring{2, {1, -1}});
    try {
        decode_cnf_model(std::vector<int>{-1, -2, -3, -4}, pos, 2);
        FAIL("expected AmbiguousModel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbiguousModel);
    }
    CHECK_THROWS_AS(decode_cnf_model(std::vector<int>{1, 2, 3, -4}, pos, 2), Error);

    // Every model of the negative-edge formula decodes to a proper colouring.
    const auto neg = signed_graph(k2, 1);
    const auto cnf = encode_cnf(neg, 2);
    int models = 0;
    for (unsigned a = 0; a < 16; ++a) {
        std::vector<int> lits;
        for (int v = 1; v <= 4; ++v) lits.push_back((a >> (v - 1)) & 1U ? v : -v);
        bool satisfied = true;
        for (const auto& clause : cnf.clauses) {
            bool any = false;
            for (int lit : clause) any = any || std::find(lits.begin(), lits.end(), lit) != lits.end();
            satisfied = satisfied && any;
        }
        if (!satisfied) continue;
        ++models;
        const auto f = decode_cnf_model(lits, neg, 2);
        CHECK(is_proper(neg, f));
        CHECK(f.colour[0] != -f.colour[1]);
    }
    CHECK(models == 2);
}
