#include "abperfect/theorems.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "abperfect/graph6.hpp"
#include "abperfect/recognizers.hpp"

namespace abperfect {

namespace {

using P = Param;

const std::vector<std::string> kF1 = {"C4", "P4", "P3+K2", "3K2"};
const std::vector<std::string> kF2 = {"P4", "P3+K2", "3K2"};
const std::vector<std::string> kTrivPerfect = {"C4", "P4"};
const std::vector<std::string> kBGrundy = {"P4", "3P3", "2D"};
const std::vector<std::string> kBPseudoGrundy = {"C4", "P4", "3P3", "2D"};

std::vector<TheoremSpec> build_registry() {
    using S = Statement;
    using K = TheoremSpec::Kind;
    std::vector<TheoremSpec> r;
    r.push_back({"T1", "omega-h-perfect <=> chordal", K::equivalence, {S::perfect(P::omega, P::hadwiger), S::chordal()}, {}, {}});
    r.push_back({"T1b", "omega-h-perfect => omega-chi-perfect", K::implication,
                 {S::perfect(P::omega, P::hadwiger), S::perfect(P::omega, P::chi)}, {}, {}});
    r.push_back({"T2", "omega-psi-perfect <=> (C4,P4,P3+K2,3K2)-free", K::equivalence,
                 {S::perfect(P::omega, P::psi), S::free_of(kF1)}, {{P::omega, P::psi}}, kF1});
    r.push_back({"T3", "alpha-h-perfect <=> omega-psi-perfect", K::equivalence,
                 {S::perfect(P::alpha, P::hadwiger), S::perfect(P::omega, P::psi)},
                 {{P::alpha, P::hadwiger}, {P::omega, P::psi}}, kF1});
    r.push_back({"T3b", "omega-psi-perfect => omega-chi-perfect", K::implication,
                 {S::perfect(P::omega, P::psi), S::perfect(P::omega, P::chi)}, {}, {}});
    r.push_back({"T4", "omega-psi <=> b-psi <=> B-psi-perfect <=> (C4,P4,P3+K2,3K2)-free", K::equivalence,
                 {S::perfect(P::omega, P::psi), S::perfect(P::b, P::psi), S::perfect(P::B, P::psi), S::free_of(kF1)},
                 {{P::omega, P::psi}, {P::b, P::psi}, {P::B, P::psi}}, kF1});
    r.push_back({"T5", "omega-alpha <=> b-alpha-perfect <=> (P4,P3+K2,3K2)-free", K::equivalence,
                 {S::perfect(P::omega, P::alpha), S::perfect(P::b, P::alpha), S::free_of(kF2)},
                 {{P::omega, P::alpha}, {P::b, P::alpha}}, kF2});
    r.push_back({"T6", "omega-gamma-perfect <=> (C4,P4)-free", K::equivalence,
                 {S::perfect(P::omega, P::pseudo_grundy), S::free_of(kTrivPerfect)},
                 {{P::omega, P::pseudo_grundy}}, kTrivPerfect});
    r.push_back({"T7", "Gamma-h-perfect <=> omega-gamma-perfect", K::equivalence,
                 {S::perfect(P::grundy, P::hadwiger), S::perfect(P::omega, P::pseudo_grundy)},
                 {{P::grundy, P::hadwiger}, {P::omega, P::pseudo_grundy}}, kTrivPerfect});
    r.push_back({"T8", "b-Gamma-perfect <=> (P4,3P3,2D)-free", K::equivalence,
                 {S::perfect(P::b, P::grundy), S::free_of(kBGrundy)}, {{P::b, P::grundy}}, kBGrundy});
    r.push_back({"T9", "b-gamma-perfect <=> (C4,P4,3P3,2D)-free", K::equivalence,
                 {S::perfect(P::b, P::pseudo_grundy), S::free_of(kBPseudoGrundy)},
                 {{P::b, P::pseudo_grundy}}, kBPseudoGrundy});
    r.push_back({"CHAINS", "omega<=h<=psi, omega<=alpha<=psi, omega<=b<=B<=psi, omega<=Gamma<=gamma",
                 K::chains, {}, {}, {}});
    r.push_back({"HADWIGER", "chi <= h", K::hadwiger, {}, {}, {}});
    TheoremSpec control{"X1", "control (false): omega-chi-perfect <=> chordal", K::equivalence,
                        {S::perfect(P::omega, P::chi), S::chordal()}, {}, {}};
    control.control = true;
    r.push_back(control);
    return r;
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
    return out;
}

std::vector<int> vertex_list(Mask m) { return VertexSet(m).vertices(); }

class Evaluator {
  public:
    Evaluator(const TheoremSpec& spec, const PatternCatalog& catalog, ProfileCache& cache)
        : spec_(spec), cache_(cache), index_(cache) {
        for (const auto& s : spec.statements) families_.push_back(s.kind == Statement::Kind::free_of ? catalog.family(s.family) : std::vector<Pattern>{});
    }

    std::optional<Counterexample> check(const Graph& g) {
        switch (spec_.kind) {
        case TheoremSpec::Kind::chains: return check_chains(g);
        case TheoremSpec::Kind::hadwiger: return check_hadwiger(g);
        default: break;
        }
        std::vector<bool> holds;
        for (std::size_t i = 0; i < spec_.statements.size(); ++i) holds.push_back(quick(g, i));
        bool broken = false;
        if (spec_.kind == TheoremSpec::Kind::equivalence) {
            for (bool h : holds) broken = broken || h != holds[0];
        } else {
            for (std::size_t i = 1; i < holds.size(); ++i) broken = broken || (holds[0] && !holds[i]);
        }
        if (!broken) return std::nullopt;
        return detail(g, cache_);
    }

    /// Full evaluation with witnesses, using the given cache.
    Counterexample detail(const Graph& g, ProfileCache& cache) const {
        Counterexample cx;
        cx.graph6 = emit_graph6(g);
        cx.order = g.order();
        for (std::size_t i = 0; i < spec_.statements.size(); ++i) cx.outcomes.push_back(explain(g, i, cache));
        return cx;
    }

  private:
    bool quick(const Graph& g, std::size_t i) {
        const auto& s = spec_.statements[i];
        switch (s.kind) {
        case Statement::Kind::ab_perfect: return index_.equal(g, s.a, s.b);
        case Statement::Kind::free_of: return is_free(g, families_[i]).member;
        case Statement::Kind::chordal: return is_chordal(g).member;
        }
        return false;
    }

    StatementOutcome explain(const Graph& g, std::size_t i, ProfileCache& cache) const {
        const auto& s = spec_.statements[i];
        StatementOutcome out;
        switch (s.kind) {
        case Statement::Kind::ab_perfect: {
            auto r = is_ab_perfect(g, s.a, s.b, cache);
            out.holds = r.perfect;
            if (r.witness) {
                out.vertices = vertex_list(r.witness->subset.bits());
                out.subgraph_graph6 = emit_graph6(induced_subgraph(g, r.witness->subset));
                out.a_value = r.witness->a_value;
                out.b_value = r.witness->b_value;
            }
            break;
        }
        case Statement::Kind::free_of:
        case Statement::Kind::chordal: {
            auto v = s.kind == Statement::Kind::chordal ? is_chordal(g) : is_free(g, families_[i]);
            out.holds = v.member;
            if (v.witness) {
                out.pattern = v.witness->pattern;
                out.vertices = v.witness->vertices;
                Mask m = 0;
                for (int x : out.vertices) m |= bit(x);
                out.subgraph_graph6 = emit_graph6(induced_subgraph(g, VertexSet(m)));
            }
            break;
        }
        }
        return out;
    }

    std::optional<Counterexample> check_chains(const Graph& g) {
        ParameterProfile p;
        std::string violation;
        try {
            p = cache_.profile(g);
            violation = chain_violation(p);
        } catch (const ConsistencyError&) {
            p = unchecked_profile(g);
            violation = chain_violation(p);
        }
        if (violation.empty()) return std::nullopt;
        Counterexample cx{emit_graph6(g), g.order(), {}, violation, p};
        return cx;
    }

    std::optional<Counterexample> check_hadwiger(const Graph& g) {
        const auto p = cache_.profile(g);
        if (p.chi <= p.hadwiger) return std::nullopt;
        return Counterexample{emit_graph6(g), g.order(), {}, "chi > hadwiger", p};
    }

    const TheoremSpec& spec_;
    ProfileCache& cache_;
    HereditaryIndex index_;
    std::vector<std::vector<Pattern>> families_;
};

bool same_outcomes(const Counterexample& a, const Counterexample& b) {
    if (a.outcomes.size() != b.outcomes.size()) return false;
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
        const auto& x = a.outcomes[i];
        const auto& y = b.outcomes[i];
        if (x.holds != y.holds || x.vertices != y.vertices || x.a_value != y.a_value || x.b_value != y.b_value)
            return false;
    }
    return true;
}

} // namespace

std::string Statement::describe() const {
    switch (kind) {
    case Kind::ab_perfect: return std::string(param_name(a)) + "-" + std::string(param_name(b)) + "-perfect";
    case Kind::free_of: return "(" + join(family) + ")-free";
    case Kind::chordal: return "chordal";
    }
    return "?";
}

const std::vector<TheoremSpec>& theorem_registry() {
    static const std::vector<TheoremSpec> registry = build_registry();
    return registry;
}

const TheoremSpec& find_theorem(std::string_view id) {
    for (const auto& t : theorem_registry())
        if (t.id == id) return t;
    throw std::invalid_argument("unknown theorem id '" + std::string(id) + "'");
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = count;
                }
            }
        });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
}

TheoremReport verify_theorem(std::string_view id, int max_order, const std::vector<Graph>& source,
                             ProfileCache& cache, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const TheoremSpec& spec = find_theorem(id);
    const PatternCatalog& catalog = options.catalog ? *options.catalog : PatternCatalog::builtin();
    for (const Graph& g : source)
        if (g.order() > max_order)
            throw std::invalid_argument("source graph " + emit_graph6(g) + " exceeds max order " + std::to_string(max_order));

    const auto hits0 = cache.hits();
    const auto misses0 = cache.misses();
    Evaluator eval(spec, catalog, cache);
    std::vector<std::optional<Counterexample>> found(source.size());
    parallel_for(source.size(), options.workers, [&](std::size_t i) { found[i] = eval.check(source[i]); });

    TheoremReport report;
    report.id = spec.id;
    report.title = spec.title;
    report.max_order = max_order;
    report.graph_count = source.size();
    report.catalog_hash = catalog.hash();
    for (auto& cx : found) {
        if (!cx) continue;
        ++report.counterexample_total;
        if (report.counterexamples.size() < kCounterexampleCap) report.counterexamples.push_back(std::move(*cx));
    }

    // Re-derive every stored counterexample with a fresh cache.
    for (const auto& cx : report.counterexamples) {
        ProfileCache fresh;
        const Graph g = parse_graph6(cx.graph6);
        if (spec.kind == TheoremSpec::Kind::chains || spec.kind == TheoremSpec::Kind::hadwiger) {
            const auto p = unchecked_profile(g);
            const bool still = spec.kind == TheoremSpec::Kind::chains ? !chain_violation(p).empty() : p.chi > p.hadwiger;
            if (!still) throw ConsistencyError("counterexample " + cx.graph6 + " does not reproduce");
            continue;
        }
        if (!same_outcomes(cx, eval.detail(g, fresh)))
            throw ConsistencyError("counterexample " + cx.graph6 + " does not reproduce");
    }

    if (options.targeted) {
        for (const auto& name : spec.obstruction_family) {
            const Graph o = catalog.at(name).graph();
            for (auto [a, b] : spec.obstruction_pairs) {
                const auto p = cache.profile(o);
                TargetedCheck t{name, emit_graph6(o), a, b, p.get(a), p.get(b), is_minimal_obstruction(o, a, b, cache)};
                report.targeted.push_back(t);
            }
        }
    }

    report.verified = report.counterexample_total == 0;
    for (const auto& t : report.targeted) report.verified = report.verified && t.passed();
    report.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.stats.cache_hits = cache.hits() - hits0;
    report.stats.cache_misses = cache.misses() - misses0;
    report.stats.workers = std::max(1, options.workers);
    return report;
}

} // namespace abperfect
