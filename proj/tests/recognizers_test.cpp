#include "abperfect/canonical.hpp"
#include "abperfect/enumerate.hpp"
#include "abperfect/graph6.hpp"
#include "abperfect/recognizers.hpp"
#include "abperfect/solvers.hpp"
#include "doctest.h"
#include "support/named_graphs.hpp"
#include "support/oracles.hpp"

using namespace abperfect;
using namespace abperfect::testing;

namespace {

std::vector<Pattern> family(std::initializer_list<const char*> names) {
    std::vector<Pattern> out;
    for (const char* n : names) out.push_back(PatternCatalog::builtin().at(n));
    return out;
}

// Induced cycle of length >= 4 by trying every vertex subset.
bool brute_has_hole(const Graph& g) {
    for (Mask s = 1; s <= g.all(); ++s) {
        if (popcount(s) < 4) continue;
        bool two_regular = true;
        for (int v : VertexSet(s).vertices()) two_regular = two_regular && popcount(g.neighbors(v) & s) == 2;
        if (two_regular && is_connected_subset(g, VertexSet(s))) return true;
    }
    return false;
}

// Catalog cycles are labeled in cycle order, so cycle witnesses check either way.
void check_witness(const Graph& g, const ClassVerdict& v) {
    REQUIRE_FALSE(v.member);
    REQUIRE(v.witness);
    const Graph host = v.witness->in_complement ? complement(g) : g;
    const auto& cat = PatternCatalog::builtin();
    if (cat.contains(v.witness->pattern)) {
        const Graph p = cat.at(v.witness->pattern).graph();
        REQUIRE(int(v.witness->vertices.size()) == p.order());
        for (int i = 0; i < p.order(); ++i)
            for (int j = i + 1; j < p.order(); ++j)
                REQUIRE(host.adjacent(v.witness->vertices[i], v.witness->vertices[j]) == p.adjacent(i, j));
    } else {
        REQUIRE(is_induced_cycle(host, v.witness->vertices));
        REQUIRE(v.witness->pattern == "C" + std::to_string(v.witness->vertices.size()));
    }
}

} // namespace

TEST_CASE("chordality examples") {
    auto v = is_chordal(c4());
    CHECK_FALSE(v.member);
    REQUIRE(v.witness);
    CHECK(v.witness->pattern == "C4");
    CHECK(is_induced_cycle(c4(), v.witness->vertices));
    for (int n = 1; n <= 8; ++n) CHECK(is_chordal(complete_graph(n)).member);
    CHECK(is_chordal(p4()).member);
    CHECK_FALSE(is_chordal(cycle_graph(7)).member);
    CHECK(is_chordal(cycle_graph(7)).witness->vertices.size() == 7);
}

TEST_CASE("LexBFS order is a perfect elimination order on chordal graphs") {
    for (const Graph& g : enumerate_up_to(7)) {
        auto order = lex_bfs_elimination_order(g);
        REQUIRE(int(order.size()) == g.order());
        Mask seen = 0;
        for (int v : order) seen |= bit(v);
        REQUIRE(seen == g.all());
    }
}

TEST_CASE("chordality agrees with cycle-family freeness and hole search") {
    std::vector<Pattern> cycles;
    for (int k = 4; k <= 7; ++k) {
        Pattern p{"C" + std::to_string(k), k, cycle_graph(k).edges()};
        cycles.push_back(p);
    }
    for (const Graph& g : enumerate_up_to(7)) {
        const auto v = is_chordal(g);
        std::vector<Pattern> upto;
        for (const auto& c : cycles)
            if (c.order <= g.order()) upto.push_back(c);
        REQUIRE(v.member == is_free(g, upto).member);
        REQUIRE(v.member == !brute_has_hole(g));
        if (!v.member) {
            REQUIRE(v.witness->vertices.size() >= 4);
            check_witness(g, v);
        }
    }
}

TEST_CASE("F-free recognition") {
    const auto f1 = family({"C4", "P4", "P3+K2", "3K2"});
    auto v = is_free(c5(), f1);
    CHECK_FALSE(v.member);
    CHECK(v.witness->pattern == "P4");
    CHECK(is_free(complete_graph(5), f1).member);
    CHECK(is_free(complete_graph(5), family({"C4", "P3", "2D", "3P3"})).member);
    auto w = is_free(three_k2(), f1);
    CHECK_FALSE(w.member);
    CHECK(w.witness->pattern == "3K2");
    for (const Graph& g : enumerate_up_to(6)) {
        auto r = is_free(g, f1);
        if (!r.member) check_witness(g, r);
    }
}

TEST_CASE("trivially perfect graphs") {
    CHECK_FALSE(is_trivially_perfect(p4()).member);
    CHECK(is_trivially_perfect(star(3)).member);
    CHECK_FALSE(is_trivially_perfect(c4()).member);
    for (const Graph& g : enumerate_up_to(7))
        if (is_trivially_perfect(g).member) REQUIRE(is_chordal(g).member);
}

TEST_CASE("Berge recognition") {
    auto v = is_berge(c5());
    CHECK_FALSE(v.member);
    CHECK(v.witness->pattern == "C5");
    CHECK_FALSE(is_berge(cycle_graph(7)).member);
    auto anti = is_berge(complement(cycle_graph(7)));
    CHECK_FALSE(anti.member);
    CHECK(anti.witness->in_complement);
    check_witness(complement(cycle_graph(7)), anti);
    CHECK(is_berge(c4()).member);
    CHECK_THROWS_AS(is_berge(Graph(13)), std::invalid_argument);
    for (const Graph& g : enumerate_up_to(7)) {
        auto r = is_berge(g);
        if (!r.member) check_witness(g, r);
        if (is_chordal(g).member) REQUIRE(r.member);
    }
}

TEST_CASE("Berge graphs are exactly those with hereditary omega = chi up to order 7") {
    for (const Graph& g : enumerate_up_to(7)) {
        bool hereditary = true;
        for (Mask s = 1; s <= g.all() && hereditary; ++s) {
            const Graph h = induced_subgraph(g, VertexSet(s));
            hereditary = clique_number(h) == chromatic_number(h);
        }
        REQUIRE_MESSAGE(is_berge(g).member == hereditary, emit_graph6(g));
    }
}
