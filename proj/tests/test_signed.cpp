#include <doctest.h>

#include <random>
#include <set>

#include "sigcol/error.hpp"
#include "sigcol/signed.hpp"
#include "support/oracles.hpp"

using namespace sigcol;

namespace {

SignedGraph signed_graph(const Graph& g, std::uint64_t bits) {
    return SignedGraph(g, oracle::signature_from_bits(g, bits));
}

int cycle_sign(const SignedGraph& sg, const std::vector<Vertex>& cycle) {
    int product = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i];
        const Vertex b = cycle[(i + 1) % cycle.size()];
        for (const auto& inc : sg.graph().incident(a))
            if (inc.neighbour == b) product *= sg.sign(inc.edge);
    }
    return product;
}

}  // namespace

TEST_CASE("all_positive") {
    CHECK(all_positive(oracle::complete_graph(3)).to_string() == "+++");
    CHECK(all_positive(oracle::complete_graph(2)).to_string() == "+");
    CHECK(all_positive(oracle::complete_graph(0)).size() == 0);
}

TEST_CASE("signature validation and serialization") {
    CHECK(Signature::parse("+-+").to_string() == "+-+");
    CHECK_THROWS_AS(Signature::parse("+x"), Error);
    CHECK_THROWS_AS(Signature(std::vector<int>{1, 0}), Error);
    try {
        SignedGraph(oracle::complete_graph(3), Signature::parse("++"));
        FAIL("expected GraphMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GraphMismatch);
    }
}

TEST_CASE("switch examples") {
    const Graph tri = oracle::complete_graph(3);  // edges (0,1),(0,2),(1,2)
    const SignedGraph pos(tri, all_positive(tri));
    CHECK(switch_at(pos, std::vector<Vertex>{0}).sigma().to_string() == "--+");
    CHECK(switch_at(pos, std::vector<Vertex>{}) == pos);
    CHECK(switch_at(pos, std::vector<Vertex>{0, 1, 2}) == pos);
    CHECK_THROWS_AS(switch_at(pos, std::vector<Vertex>{3}), Error);
}

TEST_CASE("switching is an involution and preserves cycle signs") {
    std::mt19937 rng(11);
    for (int n = 1; n <= 6; ++n) {
        const auto graphs = oracle::all_labelled_graphs(n);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph& g = graphs[rng() % graphs.size()];
            const auto sg = signed_graph(g, rng() & ((1ULL << g.edge_count()) - 1));
            std::vector<Vertex> s;
            for (int v = 0; v < n; ++v)
                if (rng() % 2) s.push_back(v);
            const auto once = switch_at(sg, s);
            CHECK(switch_at(once, s) == sg);
            for (const auto& cycle : oracle::simple_cycles(g)) {
                CHECK(cycle_sign(once, cycle) == cycle_sign(sg, cycle));
            }
        }
    }
}

TEST_CASE("enumerate_signature_classes examples") {
    const Graph tri = oracle::complete_graph(3);
    const auto reps = enumerate_signature_classes(tri);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].to_string() == "+++");
    // BFS from 0 uses (0,1),(0,2); the cotree edge is (1,2).
    CHECK(reps[1].to_string() == "++-");
    for (std::uint64_t bits = 0; bits < 8; ++bits) {
        const auto sg = signed_graph(tri, bits);
        int matches = 0;
        for (const auto& rep : reps) matches += is_switching_equivalent(sg, SignedGraph(tri, rep));
        CHECK(matches == 1);
    }

    const Graph tree = oracle::from_pairs(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK(enumerate_signature_classes(tree).size() == 1);
    CHECK(enumerate_signature_classes(oracle::complete_graph(4)).size() == 8);
    CHECK(oracle::switching_orbit_count(oracle::complete_graph(4)) == 8);
}

TEST_CASE("class representatives partition all signatures for n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        const auto graphs = oracle::all_labelled_graphs(n);
        for (std::size_t gi = 0; gi < graphs.size(); gi += (n == 5 ? 7 : 1)) {
            const Graph& g = graphs[gi];
            const SignatureClasses classes(g);
            const auto reps = enumerate_signature_classes(g);
            const int cycle_rank =
                static_cast<int>(g.edge_count()) - n + classes.components();
            CHECK(reps.size() == (std::size_t{1} << cycle_rank));
            CHECK(reps.size() == oracle::switching_orbit_count(g));
            for (std::size_t e : classes.forest_edges())
                for (const auto& rep : reps) CHECK(rep[e] == 1);
            for (std::uint64_t bits = 0; bits < (1ULL << g.edge_count()); ++bits) {
                const auto sg = signed_graph(g, bits);
                const auto cls = classes.class_of(sg.sigma());
                CHECK(is_switching_equivalent(sg, SignedGraph(g, reps[cls])));
            }
        }
    }
}

TEST_CASE("is_switching_equivalent examples") {
    const Graph tri = oracle::complete_graph(3);
    CHECK(is_switching_equivalent(signed_graph(tri, 0b001), signed_graph(tri, 0b100)));
    CHECK_FALSE(is_switching_equivalent(signed_graph(tri, 0), signed_graph(tri, 0b001)));
    CHECK(is_switching_equivalent(signed_graph(tri, 0b011), signed_graph(tri, 0b011)));
    try {
        is_switching_equivalent(signed_graph(tri, 0),
                                SignedGraph(oracle::path_graph(3), Signature::parse("++")));
        FAIL("expected GraphMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GraphMismatch);
    }
}
