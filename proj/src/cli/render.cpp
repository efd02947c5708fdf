#include "render.hpp"

#include "json.hpp"

#include "abperfect/graph6.hpp"

namespace abperfect::cli {
namespace {

using Json = nlohmann::ordered_json;

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json profile_json(const ParameterProfile& p) {
    Json j = Json::object();
    for (Param q : kAllParams) j[std::string(param_name(q))] = p.get(q);
    return j;
}

std::string profile_text(const ParameterProfile& p) {
    std::string s;
    for (Param q : kAllParams) s += " " + std::string(param_name(q)) + "=" + std::to_string(p.get(q));
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string vertices_text(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

Json report_json(const TheoremReport& r) {
    const TheoremSpec& spec = find_theorem(r.id);
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["control"] = spec.control;
    j["max_order"] = r.max_order;
    j["graph_count"] = r.graph_count;
    j["verified"] = r.verified;
    j["counterexample_total"] = r.counterexample_total;
    j["catalog_hash"] = r.catalog_hash;
    Json cxs = Json::array();
    for (const auto& cx : r.counterexamples) {
        Json c;
        c["graph6"] = cx.graph6;
        c["order"] = cx.order;
        c["note"] = cx.note;
        Json outs = Json::array();
        for (std::size_t i = 0; i < cx.outcomes.size(); ++i) {
            const auto& o = cx.outcomes[i];
            Json oj;
            oj["statement"] = spec.statements[i].describe();
            oj["holds"] = o.holds;
            oj["vertices"] = o.vertices;
            oj["subgraph_graph6"] = o.subgraph_graph6;
            oj["pattern"] = o.pattern;
            oj["a_value"] = o.a_value;
            oj["b_value"] = o.b_value;
            outs.push_back(oj);
        }
        c["outcomes"] = outs;
        c["profile"] = cx.profile ? profile_json(*cx.profile) : Json(nullptr);
        cxs.push_back(c);
    }
    j["counterexamples"] = cxs;
    Json targeted = Json::array();
    for (const auto& t : r.targeted) {
        Json tj;
        tj["pattern"] = t.pattern;
        tj["graph6"] = t.graph6;
        tj["a"] = param_name(t.a);
        tj["b"] = param_name(t.b);
        tj["a_value"] = t.a_value;
        tj["b_value"] = t.b_value;
        tj["minimal"] = t.minimal;
        tj["passed"] = t.passed();
        targeted.push_back(tj);
    }
    j["targeted"] = targeted;
    return j;
}

void report_text(std::ostream& out, const TheoremReport& r) {
    const TheoremSpec& spec = find_theorem(r.id);
    out << r.id << ' ' << (r.verified ? "verified" : "FAILED") << ": " << r.title << '\n';
    out << "  " << r.graph_count << " graphs of order <= " << r.max_order << ", " << r.counterexample_total
        << " counterexamples, catalog " << r.catalog_hash << '\n';
    for (const auto& cx : r.counterexamples) {
        out << "  counterexample " << cx.graph6 << " (order " << cx.order << ")";
        if (!cx.note.empty()) out << ": " << cx.note;
        if (cx.profile) out << ';' << profile_text(*cx.profile);
        out << '\n';
        for (std::size_t i = 0; i < cx.outcomes.size(); ++i) {
            const auto& o = cx.outcomes[i];
            out << "    " << spec.statements[i].describe() << (o.holds ? " holds" : " fails");
            if (!o.holds) {
                if (!o.pattern.empty()) out << " (" << o.pattern << " on " << vertices_text(o.vertices) << ")";
                else if (!o.vertices.empty())
                    out << " (" << o.subgraph_graph6 << " on " << vertices_text(o.vertices) << ": " << o.a_value
                        << " != " << o.b_value << ")";
            }
            out << '\n';
        }
    }
    if (r.counterexample_total > r.counterexamples.size())
        out << "  ... " << r.counterexample_total - r.counterexamples.size() << " more not listed\n";
    for (const auto& t : r.targeted)
        out << "  targeted " << t.pattern << ' ' << param_name(t.a) << '/' << param_name(t.b) << ": " << t.a_value
            << (t.a_value != t.b_value ? " != " : " == ") << t.b_value << (t.minimal ? ", minimal" : ", not minimal")
            << (t.passed() ? "" : " FAILED") << '\n';
}

} // namespace

void render_params(std::ostream& out, Format f, const std::vector<ParamsRecord>& records) {
    switch (f) {
    case Format::json: {
        Json arr = Json::array();
        for (const auto& r : records) {
            Json j;
            j["line"] = r.line;
            j["graph6"] = r.graph6;
            if (r.profile) {
                j["order"] = r.order;
                j["parameters"] = profile_json(*r.profile);
            } else {
                j["error"] = r.error;
            }
            arr.push_back(j);
        }
        dump(out, Json{{"command", "params"}, {"records", arr}});
        break;
    }
    case Format::csv:
        out << "n,graph6";
        for (Param q : kAllParams) out << ',' << param_name(q);
        out << '\n';
        for (const auto& r : records) {
            if (!r.profile) continue;
            out << r.order << ',' << csv_field(r.graph6);
            for (int v : r.profile->values()) out << ',' << v;
            out << '\n';
        }
        break;
    case Format::text:
        for (const auto& r : records) {
            if (r.profile) out << r.graph6 << " n=" << r.order << profile_text(*r.profile) << '\n';
            else out << "line " << r.line << ": error: " << r.error << '\n';
        }
        break;
    }
}

void render_enumeration(std::ostream& out, Format f, int n, const std::vector<Graph>& graphs) {
    if (f == Format::json) {
        Json arr = Json::array();
        for (const Graph& g : graphs) arr.push_back(emit_graph6(g));
        dump(out, Json{{"command", "enumerate"}, {"order", n}, {"count", graphs.size()}, {"graphs", arr}});
        return;
    }
    for (const Graph& g : graphs) out << emit_graph6(g) << '\n';
}

void render_reports(std::ostream& out, Format f, const std::string& tier, const std::vector<TheoremReport>& reports) {
    bool all = true;
    for (const auto& r : reports) all = all && r.verified;
    switch (f) {
    case Format::json: {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        dump(out, Json{{"command", "verify"}, {"tier", tier}, {"verified", all}, {"reports", arr}});
        break;
    }
    case Format::csv:
        out << "id,max_order,graph_count,verified,counterexample_total,first_counterexample,targeted_failures,catalog_hash\n";
        for (const auto& r : reports) {
            int failures = 0;
            for (const auto& t : r.targeted) failures += t.passed() ? 0 : 1;
            out << r.id << ',' << r.max_order << ',' << r.graph_count << ',' << (r.verified ? "true" : "false") << ','
                << r.counterexample_total << ',' << (r.counterexamples.empty() ? "" : csv_field(r.counterexamples[0].graph6))
                << ',' << failures << ',' << r.catalog_hash << '\n';
        }
        break;
    case Format::text:
        for (const auto& r : reports) report_text(out, r);
        out << (all ? "all verified" : "NOT all verified") << '\n';
        break;
    }
}

void render_obstructions(std::ostream& out, Format f, Param a, Param b, int max_order, const std::string& catalog_hash,
                         const std::vector<ObstructionRecord>& records) {
    const std::string an(param_name(a));
    const std::string bn(param_name(b));
    switch (f) {
    case Format::json: {
        Json arr = Json::array();
        for (const auto& r : records) {
            Json j;
            j["name"] = r.name.empty() ? Json(nullptr) : Json(r.name);
            j["graph6"] = r.graph6;
            j["order"] = r.order;
            j["a_value"] = r.a_value;
            j["b_value"] = r.b_value;
            arr.push_back(j);
        }
        dump(out, Json{{"command", "obstructions"},
                       {"a", an},
                       {"b", bn},
                       {"max_order", max_order},
                       {"catalog_hash", catalog_hash},
                       {"obstructions", arr}});
        break;
    }
    case Format::csv:
        out << "name,graph6,n," << an << ',' << bn << '\n';
        for (const auto& r : records)
            out << r.name << ',' << csv_field(r.graph6) << ',' << r.order << ',' << r.a_value << ',' << r.b_value << '\n';
        break;
    case Format::text:
        for (const auto& r : records)
            out << (r.name.empty() ? "-" : r.name) << ' ' << r.graph6 << " n=" << r.order << ' ' << an << '=' << r.a_value
                << ' ' << bn << '=' << r.b_value << '\n';
        break;
    }
}

} // namespace abperfect::cli
