#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "abperfect/enumerate.hpp"
#include "abperfect/graph6.hpp"
#include "abperfect/perfection.hpp"
#include "abperfect/recognizers.hpp"
#include "abperfect/theorems.hpp"
#include "doctest.h"
#include "support/named_graphs.hpp"

using namespace abperfect;
using namespace abperfect::testing;

namespace {

std::set<std::string> keys_of(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(canonical_key(g).bytes);
    return out;
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("pair indices cover the 36 unordered pairs") {
    std::set<int> seen;
    for (Param a : kAllParams)
        for (Param b : kAllParams)
            if (a != b) {
                CHECK(pair_index(a, b) == pair_index(b, a));
                seen.insert(pair_index(a, b));
            }
    CHECK(seen.size() == 36);
    CHECK(*seen.rbegin() == 35);
    CHECK_THROWS_AS(pair_index(Param::b, Param::b), std::invalid_argument);
}

TEST_CASE("is_ab_perfect examples") {
    ProfileCache cache;
    auto r = is_ab_perfect(c4(), Param::omega, Param::hadwiger, cache);
    CHECK_FALSE(r.perfect);
    REQUIRE(r.witness);
    CHECK(r.witness->subset == VertexSet{0, 1, 2, 3});
    CHECK(r.witness->a_value == 2);
    CHECK(r.witness->b_value == 3);

    for (Param a : kAllParams)
        for (Param b : kAllParams)
            if (a != b) CHECK(is_ab_perfect(complete_graph(5), a, b, cache).perfect);

    auto p = is_ab_perfect(p5(), Param::omega, Param::psi, cache);
    CHECK_FALSE(p.perfect);
    CHECK(p.witness->subset == VertexSet{0, 1, 2, 3});
    CHECK(isomorphic(induced_subgraph(p5(), p.witness->subset), p4()));
    CHECK(p.witness->a_value == 2);
    CHECK(p.witness->b_value == 3);

    CHECK_THROWS_AS(is_ab_perfect(c4(), Param::psi, Param::psi, cache), std::invalid_argument);
}

TEST_CASE("hereditary predicate is closed under induced subgraphs") {
    ProfileCache cache;
    for (const Graph& g : enumerate_up_to(5)) {
        for (Param a : kAllParams)
            for (Param b : kAllParams) {
                if (static_cast<int>(a) >= static_cast<int>(b)) continue;
                bool all_sub = true;
                for (Mask s = 1; s <= g.all() && all_sub; ++s)
                    all_sub = is_ab_perfect(induced_subgraph(g, VertexSet(s)), a, b, cache).perfect;
                REQUIRE(is_ab_perfect(g, a, b, cache).perfect == all_sub);
            }
    }
}

TEST_CASE("hereditary index agrees with subset scans") {
    ProfileCache cache;
    HereditaryIndex index(cache);
    for (const Graph& g : enumerate_up_to(6)) {
        for (Param a : kAllParams)
            for (Param b : kAllParams)
                if (static_cast<int>(a) < static_cast<int>(b))
                    REQUIRE(index.equal(g, a, b) == is_ab_perfect(g, a, b, cache).perfect);
    }
}

TEST_CASE("minimal obstructions recover the forbidden families") {
    ProfileCache cache;
    CHECK(keys_of(minimal_obstructions(Param::omega, Param::psi, 6, cache)) ==
          keys_of({c4(), p4(), p3_k2(), three_k2()}));
    CHECK(keys_of(minimal_obstructions(Param::omega, Param::pseudo_grundy, 6, cache)) == keys_of({c4(), p4()}));
    CHECK(keys_of(minimal_obstructions(Param::omega, Param::hadwiger, 6, cache)) ==
          keys_of({c4(), c5(), cycle_graph(6)}));
    CHECK(keys_of(minimal_obstructions(Param::omega, Param::alpha, 6, cache)) == keys_of({p4(), p3_k2(), three_k2()}));
    // Gamma(C4) = 2 = omega(C4), so only P4 appears here.
    CHECK(keys_of(minimal_obstructions(Param::omega, Param::grundy, 4, cache)) == keys_of({p4()}));
    CHECK(keys_of(minimal_obstructions(Param::b, Param::pseudo_grundy, 6, cache)) == keys_of({c4(), p4()}));
    CHECK_THROWS_AS(minimal_obstructions(Param::b, Param::b, 4, cache), std::invalid_argument);

    auto mined = minimal_obstructions(Param::omega, Param::psi, 6, cache);
    for (std::size_t i = 1; i < mined.size(); ++i) {
        const bool ordered = mined[i - 1].order() < mined[i].order() ||
                             (mined[i - 1].order() == mined[i].order() && emit_graph6(mined[i - 1]) < emit_graph6(mined[i]));
        CHECK(ordered);
    }
}

TEST_CASE("mined obstructions re-verify independently") {
    ProfileCache cache;
    for (auto [a, b] : {std::pair{Param::omega, Param::psi}, {Param::b, Param::grundy}, {Param::alpha, Param::hadwiger},
                        {Param::B, Param::psi}, {Param::chi, Param::hadwiger}}) {
        for (const Graph& o : minimal_obstructions(a, b, 6, cache)) {
            ProfileCache fresh;
            const auto p = full_profile(o);
            REQUIRE(p.get(a) != p.get(b));
            REQUIRE(is_minimal_obstruction(o, a, b, fresh));
        }
    }
}

TEST_CASE("the diamond makes 2D a minimal b/Gamma obstruction") {
    ProfileCache cache;
    const Graph d2 = PatternCatalog::builtin().at("2D").graph();
    CHECK(b_chromatic_number(d2) == 4);
    CHECK(grundy_number(d2) == 3);
    for (Mask s = 1; s < d2.all(); ++s) {
        const Graph h = induced_subgraph(d2, VertexSet(s));
        REQUIRE(b_chromatic_number(h) == grundy_number(h));
    }
    CHECK(is_minimal_obstruction(d2, Param::b, Param::grundy, cache));
    const Graph p33 = PatternCatalog::builtin().at("3P3").graph();
    CHECK(is_minimal_obstruction(p33, Param::b, Param::grundy, cache));
    CHECK(is_minimal_obstruction(p33, Param::b, Param::pseudo_grundy, cache));
}

TEST_CASE("profile cache persistence") {
    ProfileCache cache;
    for (const Graph& g : enumerate_up_to(7)) cache.profile(g);
    CHECK(cache.size() == 1252);
    const auto path = temp_path("abperfect_cache_test.txt");
    cache.save(path);
    auto loaded = ProfileCache::load(path);
    CHECK(loaded.entries() == cache.entries());
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "@ 1 1 1 1 1 1 1 1 1");
    std::filesystem::remove(path);

    CHECK(cache.audit(100, 12345) == 100);
    CHECK(cache.hits() == 0);
    cache.profile(c4());
    CHECK(cache.hits() == 1);
}

TEST_CASE("profile cache merging") {
    ProfileCache a;
    ProfileCache b;
    a.profile(c4());
    b.profile(p4());
    a.merge(b);
    CHECK(a.size() == 2);
    CHECK(a.find(canonical_key(p4())) == full_profile(p4()));

    ProfileCache c;
    auto wrong = full_profile(c4());
    wrong.psi = 4;
    c.insert(canonical_key(c4()), wrong);
    CHECK_THROWS_AS(a.merge(c), CacheError);
}

TEST_CASE("corrupt cache lines are reported by number") {
    auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            ProfileCache::parse(in);
        } catch (const CacheError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(line_of("@ 1 1 1 1 1 1 1 1 1\nC] 2 2\n").find("line 2") != std::string::npos);
    CHECK(line_of("Cl 2 2 3 3 2 2 2 2 3\n").find("canonical") != std::string::npos);
    CHECK(line_of("@ 1 1 1 1 1 1 1 1 1 7\n").find("trailing") != std::string::npos);
    CHECK(line_of("!! 1 1 1 1 1 1 1 1 1\n").find("line 1") != std::string::npos);
    CHECK(line_of("@ 1 1 1 1 1 1 1 1 1\n@ 1 1 1 1 1 1 1 1 1\n") == "no error");
    CHECK(line_of("@ 1 1 1 1 1 1 1 1 1\n@ 1 1 1 1 1 1 1 1 2\n").find("line 2") != std::string::npos);
}

TEST_CASE("verify_theorem runs the registry") {
    ProfileCache cache;
    auto t1 = verify_theorem("T1", 7, enumerate_up_to(7), cache);
    CHECK(t1.verified);
    CHECK(t1.graph_count == 1252);
    CHECK(t1.counterexample_total == 0);
    CHECK(t1.catalog_hash == PatternCatalog::builtin().hash());

    auto t6 = verify_theorem("T6", 6, enumerate_up_to(6), cache);
    CHECK(t6.verified);
    REQUIRE(t6.targeted.size() == 2);
    for (const auto& t : t6.targeted) CHECK(t.passed());

    CHECK_THROWS_AS(verify_theorem("T42", 4, enumerate_up_to(4), cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("T1", 3, enumerate_up_to(4), cache), std::invalid_argument);
}

TEST_CASE("the false control entry is caught") {
    ProfileCache cache;
    auto r = verify_theorem("X1", 4, enumerate_up_to(4), cache);
    CHECK_FALSE(r.verified);
    REQUIRE(r.counterexample_total == 1);
    const auto& cx = r.counterexamples.front();
    CHECK(cx.graph6 == canonical_key(c4()).bytes);
    REQUIRE(cx.outcomes.size() == 2);
    CHECK(cx.outcomes[0].holds);
    CHECK_FALSE(cx.outcomes[1].holds);
    CHECK(cx.outcomes[1].pattern == "C4");

    auto big = verify_theorem("X1", 6, enumerate_up_to(6), cache);
    CHECK(big.counterexample_total > kCounterexampleCap);
    CHECK(big.counterexamples.size() == kCounterexampleCap);
}

TEST_CASE("reports do not depend on the worker count") {
    ProfileCache one_cache;
    ProfileCache four_cache;
    const auto graphs = enumerate_up_to(6);
    for (const char* id : {"X1", "T9", "CHAINS"}) {
        VerifyOptions one{1, nullptr, true};
        VerifyOptions four{4, nullptr, true};
        auto a = verify_theorem(id, 6, graphs, one_cache, one);
        auto b = verify_theorem(id, 6, graphs, four_cache, four);
        REQUIRE(a.counterexample_total == b.counterexample_total);
        REQUIRE(a.counterexamples.size() == b.counterexamples.size());
        for (std::size_t i = 0; i < a.counterexamples.size(); ++i) {
            CHECK(a.counterexamples[i].graph6 == b.counterexamples[i].graph6);
            CHECK(a.counterexamples[i].outcomes.size() == b.counterexamples[i].outcomes.size());
        }
    }
    CHECK(one_cache.entries() == four_cache.entries());
}

TEST_CASE("targeted checks cover 3P3 and 2D at their native orders") {
    ProfileCache cache;
    for (const char* id : {"T8", "T9"}) {
        auto r = verify_theorem(id, 5, enumerate_up_to(5), cache);
        CHECK(r.verified);
        std::set<std::string> names;
        for (const auto& t : r.targeted) {
            CHECK(t.passed());
            names.insert(t.pattern);
        }
        CHECK(names.contains("3P3"));
        CHECK(names.contains("2D"));
    }
}

TEST_CASE("an overridden D shows up in the targeted checks and the hash") {
    // With D replaced by K4, "2D" is 2K4, which is b/Gamma-perfect.
    std::string text = "order=2 K2: 0-1\norder=3 P3: 0-1, 1-2\norder=4 P4: 0-1, 1-2, 2-3\n"
                       "order=4 C4: 0-1, 1-2, 2-3, 0-3\norder=9 3P3: 0-1, 1-2, 3-4, 4-5, 6-7, 7-8\n"
                       "order=8 2D: 0-1, 0-2, 0-3, 1-2, 1-3, 2-3, 4-5, 4-6, 4-7, 5-6, 5-7, 6-7\n";
    auto catalog = PatternCatalog::parse(text);
    ProfileCache cache;
    VerifyOptions opt;
    opt.catalog = &catalog;
    auto r = verify_theorem("T8", 4, enumerate_up_to(4), cache, opt);
    CHECK_FALSE(r.verified);
    CHECK(r.catalog_hash != PatternCatalog::builtin().hash());
    bool flagged = false;
    for (const auto& t : r.targeted) flagged = flagged || (t.pattern == "2D" && !t.passed());
    CHECK(flagged);
}
