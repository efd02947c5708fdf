#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abperfect/graph.hpp"
#include "abperfect/pattern.hpp"
#include "abperfect/perfection.hpp"
#include "abperfect/solvers.hpp"

namespace abperfect {

/// One side of a theorem, evaluated per graph.
struct Statement {
    enum class Kind { ab_perfect, free_of, chordal };

    Kind kind = Kind::ab_perfect;
    Param a = Param::omega;
    Param b = Param::omega;
    std::vector<std::string> family;

    static Statement perfect(Param a, Param b) { return {Kind::ab_perfect, a, b, {}}; }
    static Statement free_of(std::vector<std::string> names) { return {Kind::free_of, {}, {}, std::move(names)}; }
    static Statement chordal() { return {Kind::chordal, {}, {}, {}}; }

    std::string describe() const;
};

struct TheoremSpec {
    enum class Kind {
        equivalence, // all statements agree on every graph
        implication, // the first statement implies each of the others
        chains,      // the parameter inequalities hold on every graph
        hadwiger,    // chi <= h on every graph
    };

    std::string id;
    std::string title;
    Kind kind = Kind::equivalence;
    std::vector<Statement> statements;
    /// Each named pattern must be a minimal obstruction for every pair.
    std::vector<std::pair<Param, Param>> obstruction_pairs;
    std::vector<std::string> obstruction_family;
    /// Deliberately false entries that check the harness can fail.
    bool control = false;
};

const std::vector<TheoremSpec>& theorem_registry();
/// Throws std::invalid_argument for an unknown id.
const TheoremSpec& find_theorem(std::string_view id);

struct StatementOutcome {
    bool holds = false;
    /// Failing induced subgraph (ab_perfect), pattern hit (free_of) or hole (chordal).
    std::vector<int> vertices;
    std::string subgraph_graph6;
    std::string pattern;
    int a_value = 0;
    int b_value = 0;
};

struct Counterexample {
    std::string graph6;
    int order = 0;
    std::vector<StatementOutcome> outcomes;
    std::string note;
    /// Nine values, filled for chain and Hadwiger checks.
    std::optional<ParameterProfile> profile;
};

struct TargetedCheck {
    std::string pattern;
    std::string graph6;
    Param a = Param::omega;
    Param b = Param::omega;
    int a_value = 0;
    int b_value = 0;
    bool minimal = false;

    bool passed() const { return a_value != b_value && minimal; }
};

struct RunStats {
    double elapsed_ms = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;
    int workers = 1;
};

inline constexpr std::size_t kCounterexampleCap = 25;

struct TheoremReport {
    std::string id;
    std::string title;
    int max_order = 0;
    std::size_t graph_count = 0;
    bool verified = false;
    std::size_t counterexample_total = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<TargetedCheck> targeted;
    std::string catalog_hash;
    RunStats stats;
};

struct VerifyOptions {
    int workers = 1;
    const PatternCatalog* catalog = nullptr;
    bool targeted = true;
};

/// Checks a registered theorem on every graph of `source` (all of order
/// <= max_order). Stored counterexamples are re-derived from scratch before
/// the report is returned.
TheoremReport verify_theorem(std::string_view id, int max_order, const std::vector<Graph>& source,
                             ProfileCache& cache, const VerifyOptions& options = {});

/// Runs fn(i) for i in [0, count) on `workers` threads; rethrows the first exception.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

} // namespace abperfect
