// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "abperfect/canonical.hpp"
#include "abperfect/cli.hpp"
#include "abperfect/enumerate.hpp"
#include "abperfect/graph6.hpp"
#include "abperfect/perfection.hpp"
#include "abperfect/theorems.hpp"
#include "support/named_graphs.hpp"
#include "support/oracles.hpp"

using namespace abperfect;
using namespace abperfect::testing;

namespace {

/// Collects failure messages for one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int failed_criteria = 0;

void criterion(int number, const std::string& title, const std::function<void(Check&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = c.failures.empty();
    if (!ok) ++failed_criteria;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << number << "] " << title;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << " " << timing << '\n';
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::cout << "       " << c.failures[i] << '\n';
    std::cout.flush();
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    code = cli::run(args, in, out, err);
    return out.str();
}

std::set<std::string> keys_of(const std::vector<Graph>& graphs) {
    std::set<std::string> out;
    for (const Graph& g : graphs) out.insert(canonical_key(g).bytes);
    return out;
}

/// b and Gamma by listing every proper coloring onto {0..k-1}.
struct BruteBGamma {
    int b = 0;
    int grundy = 0;
};

BruteBGamma brute_b_gamma(const Graph& g) {
    const int n = g.order();
    BruteBGamma r;
    std::vector<int> c(n, -1);
    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            int k = 0;
            std::vector<bool> used(n, false);
            for (int x : c) used[x] = true;
            while (k < n && used[k]) ++k;
            for (int j = k; j < n; ++j)
                if (used[j]) return;
            std::vector<std::vector<bool>> sees(n, std::vector<bool>(k, false));
            for (int u = 0; u < n; ++u)
                for (int w = 0; w < n; ++w)
                    if (g.adjacent(u, w)) sees[u][c[w]] = true;
            bool grundy = true;
            for (int u = 0; u < n; ++u)
                for (int j = 0; j < c[u]; ++j) grundy = grundy && sees[u][j];
            bool dominating = true;
            for (int i = 0; i < k; ++i) {
                bool has = false;
                for (int u = 0; u < n; ++u) {
                    if (c[u] != i) continue;
                    bool all = true;
                    for (int j = 0; j < k; ++j) all = all && (j == i || sees[u][j]);
                    has = has || all;
                }
                dominating = dominating && has;
            }
            if (grundy) r.grundy = std::max(r.grundy, k);
            if (dominating) r.b = std::max(r.b, k);
            return;
        }
        for (int col = 0; col < n; ++col) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = !(g.adjacent(u, v) && c[u] == col);
            if (!ok) continue;
            c[v] = col;
            place(v + 1);
        }
        c[v] = -1;
    };
    place(0);
    return r;
}

} // namespace

int main() {
    const auto& catalog = PatternCatalog::builtin();
    const auto up_to_7 = enumerate_up_to(7);
    const auto up_to_8 = enumerate_up_to(8);
    ProfileCache cache;
    const VerifyOptions four{4, nullptr, true};

    criterion(1, "enumeration counts 1,2,4,11,34,156,1044 for n=1..7, n<=6 cross-checked by labeled dedup", [&](Check& c) {
        const int expected[] = {1, 2, 4, 11, 34, 156, 1044};
        for (int n = 1; n <= 7; ++n) {
            int code = 0;
            const std::string out = run_cli({"enumerate", std::to_string(n)}, code);
            std::istringstream lines(out);
            std::set<std::string> distinct;
            int count = 0;
            for (std::string l; std::getline(lines, l); ++count) {
                distinct.insert(l);
                const Graph g = parse_graph6(l);
                c.expect(canonical_key(g).bytes == l, "non-canonical line " + l);
            }
            c.expect(code == 0, "exit code for n=" + std::to_string(n));
            c.expect(count == expected[n - 1] && static_cast<int>(distinct.size()) == count,
                     "n=" + std::to_string(n) + " gave " + std::to_string(count));
            if (n <= 6) c.expect(brute_class_count(n) == expected[n - 1], "dedup oracle disagrees at n=" + std::to_string(n));
        }
    });

    criterion(2, "Figure-1 table values from full_profile", [&](Check& c) {
        std::map<std::string, ParameterProfile> p;
        for (const char* name : {"C4", "P4", "P3+K2", "3K2", "3P3", "D", "2D", "C5"}) p[name] = full_profile(catalog.at(name).graph());
        c.expect(p["C4"].omega == 2 && p["C4"].hadwiger == 3, "omega(C4)=2, h(C4)=3");
        for (const char* h : {"P4", "P3+K2", "3K2"}) {
            c.expect(p[h].alpha == 3, std::string("alpha(") + h + ")=3");
            c.expect(p[h].hadwiger == 2, std::string("h(") + h + ")=2");
        }
        c.expect(p["P4"].grundy == 3, "Gamma(P4)=3");
        c.expect(p["C4"].grundy == 2, "Gamma(C4)=2");
        for (const char* h : {"C4", "P4", "P3+K2", "3K2"}) c.expect(p[h].pseudo_b != p[h].psi, std::string("B != psi on ") + h);
        for (const char* h : {"C4", "P4", "3P3", "2D"})
            c.expect(p[h].b_chromatic != p[h].pseudo_grundy, std::string("b != gamma on ") + h);
        c.detail = "8 graphs";
    });

    criterion(3, "T1 omega-h-perfect <=> chordal, zero counterexamples on 1252 graphs of order <= 7", [&](Check& c) {
        const auto r = verify_theorem("T1", 7, up_to_7, cache, four);
        c.expect(r.graph_count == 1252, "graph count " + std::to_string(r.graph_count));
        c.expect(r.verified && r.counterexample_total == 0, std::to_string(r.counterexample_total) + " counterexamples");
        c.detail = std::to_string(r.graph_count) + " graphs";
    });

    criterion(4, "T2-T7 at order <= 7; T8, T9 at <= 7 and <= 8; targeted 3P3 and 2D checks", [&](Check& c) {
        std::size_t checked = 0;
        auto run = [&](const std::string& id, int order, const std::vector<Graph>& source) {
            const auto r = verify_theorem(id, order, source, cache, four);
            c.expect(r.verified && r.counterexample_total == 0,
                     id + " at " + std::to_string(order) + ": " + std::to_string(r.counterexample_total) + " counterexamples");
            for (const auto& t : r.targeted) c.expect(t.passed(), id + " targeted " + t.pattern + " failed");
            checked += r.graph_count;
            return r;
        };
        for (const char* id : {"T2", "T3", "T4", "T5", "T6", "T7", "T8", "T9"}) run(id, 7, up_to_7);
        std::set<std::string> targeted;
        for (const char* id : {"T8", "T9"}) {
            const auto r = run(id, 8, up_to_8);
            c.expect(r.graph_count == 13598, std::string(id) + " extended universe size " + std::to_string(r.graph_count));
            for (const auto& t : r.targeted) targeted.insert(t.pattern);
        }
        c.expect(targeted.contains("3P3") && targeted.contains("2D"), "targeted checks missing 3P3 or 2D");
        c.detail = std::to_string(checked) + " graph checks";
    });

    criterion(5, "minimal obstructions for omega/psi, omega/gamma, omega/h, omega/alpha up to order 6", [&](Check& c) {
        const Graph c4 = catalog.at("C4").graph(), p4 = catalog.at("P4").graph();
        const Graph p3k2 = catalog.at("P3+K2").graph(), k2x3 = catalog.at("3K2").graph();
        c.expect(keys_of(minimal_obstructions(Param::omega, Param::psi, 6, cache)) == keys_of({c4, p4, p3k2, k2x3}), "omega/psi");
        c.expect(keys_of(minimal_obstructions(Param::omega, Param::pseudo_grundy, 6, cache)) == keys_of({c4, p4}), "omega/gamma");
        c.expect(keys_of(minimal_obstructions(Param::omega, Param::hadwiger, 6, cache)) ==
                     keys_of({c4, cycle_graph(5), cycle_graph(6)}),
                 "omega/h");
        c.expect(keys_of(minimal_obstructions(Param::omega, Param::alpha, 6, cache)) == keys_of({p4, p3k2, k2x3}), "omega/alpha");
    });

    criterion(6, "chain inequalities and chi <= h on every graph of order <= 7", [&](Check& c) {
        for (const Graph& g : up_to_7) {
            const auto p = unchecked_profile(g);
            const bool ok = p.omega <= p.hadwiger && p.hadwiger <= p.psi && p.omega <= p.alpha && p.alpha <= p.psi &&
                            p.omega <= p.b_chromatic && p.b_chromatic <= p.pseudo_b && p.pseudo_b <= p.psi &&
                            p.omega <= p.grundy && p.grundy <= p.pseudo_grundy && p.chi <= p.hadwiger;
            c.expect(ok, "violated on " + emit_graph6(g));
        }
        c.detail = std::to_string(up_to_7.size()) + " graphs";
    });

    criterion(7, "hadwiger_number = hadwiger_via_coloring, exhaustive n<=6 and 200 random at n=7,8", [&](Check& c) {
        for (const Graph& g : enumerate_up_to(6))
            c.expect(hadwiger_number(g) == hadwiger_via_coloring(g), "differ on " + emit_graph6(g));
        std::mt19937 rng(20261015);
        for (int i = 0; i < 200; ++i) {
            const Graph g = random_graph(7 + i % 2, 0.25 + 0.5 * (i % 5) / 4.0, rng);
            c.expect(hadwiger_number(g) == hadwiger_via_coloring(g), "differ on " + emit_graph6(g));
        }
        c.detail = "356 + 200 graphs";
    });

    criterion(8, "2D is a minimal b/Gamma obstruction with D = diamond (brute force)", [&](Check& c) {
        const Graph d2 = catalog.at("2D").graph();
        c.expect(isomorphic(catalog.at("D").graph(), diamond()), "catalog D is not the diamond");
        c.expect(isomorphic(d2, two_diamonds()), "catalog 2D is not two diamonds");
        const auto whole = brute_b_gamma(d2);
        c.expect(whole.b == 4, "b(2D)=" + std::to_string(whole.b));
        c.expect(whole.grundy == 3, "Gamma(2D)=" + std::to_string(whole.grundy));
        c.expect(b_chromatic_number(d2) == 4 && grundy_number(d2) == 3, "solvers disagree with brute force on 2D");
        int subgraphs = 0;
        for (Mask s = 1; s < d2.all(); ++s, ++subgraphs) {
            const auto sub = brute_b_gamma(induced_subgraph(d2, VertexSet(s)));
            c.expect(sub.b == sub.grundy, "b != Gamma on subset " + std::to_string(s));
        }
        c.detail = std::to_string(subgraphs) + " proper induced subgraphs";
    });

    criterion(9, "the false control entry yields counterexample C4 at order 4", [&](Check& c) {
        ProfileCache fresh;
        const auto r = verify_theorem("X1", 4, enumerate_up_to(4), fresh);
        c.expect(!r.verified, "control verified");
        c.expect(r.counterexample_total == 1, std::to_string(r.counterexample_total) + " counterexamples");
        c.expect(!r.counterexamples.empty() && isomorphic(parse_graph6(r.counterexamples[0].graph6), catalog.at("C4").graph()),
                 "counterexample is not C4");
        int code = 0;
        run_cli({"verify", "--theorem", "X1", "--max-order", "4"}, code);
        c.expect(code == 1, "cli exit code " + std::to_string(code));
    });

    criterion(10, "graph6 round trip and canonical-key invariance on order <= 7 plus 1000 random permutations", [&](Check& c) {
        for (const Graph& g : up_to_7) {
            const std::string s = emit_graph6(g);
            c.expect(s == reference_graph6(g), "emit differs from reference on " + s);
            c.expect(parse_graph6(s) == g, "round trip failed on " + s);
            c.expect(canonical_key(g).bytes == s, "enumerated graph not canonical: " + s);
        }
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, up_to_7.size() - 1);
        for (int i = 0; i < 1000; ++i) {
            const Graph& g = up_to_7[pick(rng)];
            const Graph h = g.permuted(random_permutation(g.order(), rng));
            c.expect(parse_graph6(emit_graph6(h)) == h, "round trip failed on " + emit_graph6(h));
            c.expect(canonical_key(h) == canonical_key(g), "key changed under permutation of " + emit_graph6(g));
        }
        c.detail = std::to_string(up_to_7.size()) + " graphs, 1000 permutations";
    });

    std::cout << (failed_criteria == 0 ? "ALL CRITERIA PASSED" : std::to_string(failed_criteria) + " CRITERIA FAILED") << '\n';
    return failed_criteria == 0 ? 0 : 1;
}
