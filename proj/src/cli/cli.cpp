#include "abperfect/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "abperfect/enumerate.hpp"
#include "abperfect/graph6.hpp"
#include "abperfect/perfection.hpp"
#include "abperfect/theorems.hpp"
#include "render.hpp"

namespace abperfect::cli {
namespace {

constexpr int kMaxInputOrder = 12;
constexpr std::size_t kAuditCount = 100;
constexpr std::uint64_t kAuditSeed = 0x5eed;

/// A user-facing failure that maps to exit code 2.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string patterns;
    std::string cache;
    int workers = 0;

    Format parsed_format() const {
        if (format == "json") return Format::json;
        if (format == "csv") return Format::csv;
        return Format::text;
    }
    int worker_count() const { return workers > 0 ? workers : std::max(1U, std::thread::hardware_concurrency()); }
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::vector<Graph6Line> read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_graph6_lines(in);
    std::ifstream file(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    return read_graph6_lines(file);
}

PatternCatalog load_catalog(const Common& c) {
    if (c.patterns.empty()) return PatternCatalog::builtin();
    try {
        return PatternCatalog::load(c.patterns);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

ProfileCache open_cache(const Common& c, std::ostream& err) {
    if (c.cache.empty() || !std::filesystem::exists(c.cache)) return {};
    ProfileCache cache;
    try {
        cache = ProfileCache::load(c.cache);
        const auto audited = cache.audit(std::min(kAuditCount, cache.size()), kAuditSeed);
        err << "cache: loaded " << cache.size() << " entries from " << c.cache << ", audited " << audited << '\n';
    } catch (const CacheError& e) {
        throw InputError(e.what());
    } catch (const ConsistencyError& e) {
        throw InputError(std::string("cache audit failed: ") + e.what());
    }
    return cache;
}

void close_cache(const Common& c, const ProfileCache& cache, std::ostream& err) {
    if (c.cache.empty()) return;
    try {
        cache.save(c.cache);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    err << "cache: saved " << cache.size() << " entries to " << c.cache << '\n';
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

struct ParamsArgs {
    std::string input;
};

int cmd_params(const Common& c, const ParamsArgs& a, Streams s) {
    const auto lines = read_input(a.input, s.in);
    ProfileCache cache = open_cache(c, s.err);
    std::vector<ParamsRecord> records(lines.size());
    parallel_for(lines.size(), c.worker_count(), [&](std::size_t i) {
        const auto& l = lines[i];
        auto& r = records[i];
        r.line = l.line_number;
        r.graph6 = l.text;
        if (!l.graph) {
            r.error = l.error;
            return;
        }
        r.order = l.graph->order();
        try {
            r.profile = cache.profile(*l.graph);
        } catch (const ConsistencyError& e) {
            r.error = e.what();
        }
    });
    int code = kOk;
    for (const auto& r : records) {
        if (r.profile) continue;
        s.err << "line " << r.line << ": " << r.error << '\n';
        code = kInputError;
    }
    render_params(s.out, c.parsed_format(), records);
    close_cache(c, cache, s.err);
    return code;
}

struct EnumerateArgs {
    int order = 0;
};

int cmd_enumerate(const Common& c, const EnumerateArgs& a, Streams s) {
    const auto graphs = enumerate_graphs(a.order);
    render_enumeration(s.out, c.parsed_format(), a.order, graphs);
    s.err << graphs.size() << " graphs of order " << a.order << '\n';
    return kOk;
}

struct VerifyArgs {
    std::string theorem = "all";
    int max_order = 7;
    bool max_order_given = false;
    std::string tier = "full";
    std::string input;
};

std::vector<std::string> selected_theorems(const std::string& id) {
    std::vector<std::string> ids;
    if (id == "all") {
        for (const auto& t : theorem_registry())
            if (!t.control) ids.push_back(t.id);
        return ids;
    }
    try {
        find_theorem(id);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return {id};
}

int cmd_verify(const Common& c, const VerifyArgs& a, Streams s) {
    const auto ids = selected_theorems(a.theorem);
    const PatternCatalog catalog = load_catalog(c);
    const bool extended = a.tier == "extended";

    std::vector<Graph> input_graphs;
    int max_order = a.max_order;
    if (!a.input.empty()) {
        if (extended) throw InputError("--tier extended enumerates graphs and cannot be combined with --input");
        int largest = 1;
        for (const auto& l : read_input(a.input, s.in)) {
            if (!l.graph) throw InputError("line " + std::to_string(l.line_number) + ": " + l.error);
            largest = std::max(largest, l.graph->order());
            input_graphs.push_back(*l.graph);
        }
        if (!a.max_order_given) max_order = largest;
        if (max_order > kMaxInputOrder) throw InputError("input graphs must have order <= " + std::to_string(kMaxInputOrder));
        if (largest > max_order)
            throw InputError("input contains a graph of order " + std::to_string(largest) + " > --max-order " +
                             std::to_string(max_order));
    } else if (max_order > kMaxEnumerationOrder) {
        throw InputError("--max-order must be at most " + std::to_string(kMaxEnumerationOrder));
    }

    ProfileCache cache = open_cache(c, s.err);
    std::map<int, std::vector<Graph>> universes;
    auto universe = [&](int order) -> const std::vector<Graph>& {
        if (!a.input.empty()) return input_graphs;
        auto it = universes.find(order);
        if (it == universes.end()) it = universes.emplace(order, enumerate_up_to(order)).first;
        return it->second;
    };

    VerifyOptions options{c.worker_count(), &catalog, true};
    std::vector<TheoremReport> reports;
    for (const auto& id : ids) {
        int order = max_order;
        if (extended && (id == "T8" || id == "T9")) order = std::max(order, kMaxEnumerationOrder);
        const auto start = std::chrono::steady_clock::now();
        reports.push_back(verify_theorem(id, order, universe(order), cache, options));
        const auto& st = reports.back().stats;
        s.err << id << ": " << reports.back().graph_count << " graphs in " << static_cast<long long>(ms_since(start))
              << " ms, cache hits " << st.cache_hits << ", misses " << st.cache_misses << ", workers " << st.workers
              << '\n';
    }
    render_reports(s.out, c.parsed_format(), a.tier, reports);
    close_cache(c, cache, s.err);
    const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verified; });
    return all ? kOk : kCounterexample;
}

struct ObstructionArgs {
    std::string a;
    std::string b;
    int max_order = 6;
};

int cmd_obstructions(const Common& c, const ObstructionArgs& args, Streams s) {
    Param a;
    Param b;
    try {
        a = parse_param(args.a);
        b = parse_param(args.b);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (a == b) throw InputError("the two parameters must differ");
    const PatternCatalog catalog = load_catalog(c);
    ProfileCache cache = open_cache(c, s.err);

    std::map<std::string, std::string> names;
    for (const auto& p : catalog.patterns()) names.emplace(canonical_key(p.graph()).bytes, p.name);

    std::vector<ObstructionRecord> records;
    for (const Graph& g : minimal_obstructions(a, b, args.max_order, cache)) {
        const auto key = canonical_key(g).bytes;
        const auto p = cache.profile(g);
        auto it = names.find(key);
        records.push_back({it == names.end() ? "" : it->second, key, g.order(), p.get(a), p.get(b)});
    }
    render_obstructions(s.out, c.parsed_format(), a, b, args.max_order, catalog.hash(), records);
    s.err << records.size() << " minimal obstructions of order <= " << args.max_order << '\n';
    close_cache(c, cache, s.err);
    return kOk;
}

void add_common(CLI::App* sub, Common& c, bool with_patterns, bool with_cache) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->envname("ABPERFECT_FORMAT")
        ->capture_default_str();
    sub->add_option("--workers", c.workers, "Worker threads (0 = one per core)")
        ->check(CLI::NonNegativeNumber)
        ->envname("ABPERFECT_WORKERS");
    if (with_patterns)
        sub->add_option("--patterns", c.patterns, "Pattern catalog file (default: built-in)")->envname("ABPERFECT_PATTERNS");
    if (with_cache)
        sub->add_option("--cache", c.cache, "Profile cache file, loaded and audited if present, saved on exit")
            ->envname("ABPERFECT_CACHE");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graph parameters and (a,b)-perfection checks", "abperfect"};
    app.require_subcommand(1);

    Common common;
    ParamsArgs params;
    EnumerateArgs enumerate;
    VerifyArgs verify;
    ObstructionArgs obstructions;

    auto* p = app.add_subcommand("params", "Compute all nine parameters for graph6 input");
    p->add_option("--input", params.input, "graph6 file (default: standard input)")->envname("ABPERFECT_INPUT");
    add_common(p, common, false, true);

    auto* e = app.add_subcommand("enumerate", "List one canonical graph6 per isomorphism class");
    e->add_option("n", enumerate.order, "Order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
    add_common(e, common, false, false);

    auto* v = app.add_subcommand("verify", "Verify registered theorems on all small graphs");
    v->add_option("--theorem", verify.theorem, "Theorem id or 'all'")->envname("ABPERFECT_THEOREM")->capture_default_str();
    auto* mo = v->add_option("--max-order", verify.max_order, "Largest order checked")
                   ->check(CLI::Range(1, kMaxInputOrder))
                   ->envname("ABPERFECT_MAX_ORDER")
                   ->capture_default_str();
    v->add_option("--tier", verify.tier, "full, or extended to run T8/T9 up to order 8")
        ->check(CLI::IsMember({"full", "extended"}))
        ->envname("ABPERFECT_TIER")
        ->capture_default_str();
    v->add_option("--input", verify.input, "Check these graph6 graphs instead of enumerating");
    add_common(v, common, true, true);

    auto* o = app.add_subcommand("obstructions", "Minimal graphs with a != b");
    o->add_option("a", obstructions.a, "First parameter")->required();
    o->add_option("b", obstructions.b, "Second parameter")->required();
    o->add_option("--max-order", obstructions.max_order, "Largest order searched")
        ->check(CLI::Range(1, kMaxEnumerationOrder))
        ->envname("ABPERFECT_MAX_ORDER")
        ->capture_default_str();
    add_common(o, common, true, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    }
    verify.max_order_given = mo->count() > 0 || std::getenv("ABPERFECT_MAX_ORDER") != nullptr;

    Streams s{in, out, err};
    try {
        if (*p) return cmd_params(common, params, s);
        if (*e) return cmd_enumerate(common, enumerate, s);
        if (*v) return cmd_verify(common, verify, s);
        return cmd_obstructions(common, obstructions, s);
    } catch (const InputError& ex) {
        err << "error: " << ex.what() << '\n';
        return kInputError;
    }
}

} // namespace abperfect::cli
