#include "abperfect/pattern.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "builtin_patterns.hpp"

namespace abperfect {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, int line, const char* what) {
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw PatternError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    return value;
}

Pattern parse_line(std::string_view body, int line) {
    if (!body.starts_with("order=")) throw PatternError(line, "expected 'order=<k>' prefix");
    body.remove_prefix(6);
    auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) throw PatternError(line, "missing pattern name");
    Pattern p;
    p.order = parse_int(body.substr(0, space), line, "order");
    if (p.order < 1 || p.order > kMaxVertices) throw PatternError(line, "order out of range 1..32");
    body = trim(body.substr(space));
    auto colon = body.find(':');
    if (colon == std::string_view::npos) throw PatternError(line, "missing ':' after name");
    p.name = std::string(trim(body.substr(0, colon)));
    if (p.name.empty()) throw PatternError(line, "empty pattern name");
    body = trim(body.substr(colon + 1));

    std::set<std::pair<int, int>> seen;
    while (!body.empty()) {
        auto comma = body.find(',');
        auto item = trim(body.substr(0, comma));
        auto dash = item.find('-');
        if (dash == std::string_view::npos) throw PatternError(line, "edge '" + std::string(item) + "' lacks '-'");
        int u = parse_int(item.substr(0, dash), line, "vertex");
        int v = parse_int(item.substr(dash + 1), line, "vertex");
        if (u < 0 || v < 0 || u >= p.order || v >= p.order)
            throw PatternError(line, "edge " + std::string(item) + " references a vertex >= order");
        if (u == v) throw PatternError(line, "loop edge " + std::string(item));
        if (!seen.insert(std::minmax(u, v)).second) throw PatternError(line, "duplicate edge " + std::string(item));
        p.edges.emplace_back(u, v);
        if (comma == std::string_view::npos) break;
        body = trim(body.substr(comma + 1));
        if (body.empty()) throw PatternError(line, "dangling ','");
    }
    return p;
}

class Matcher {
  public:
    Matcher(const Graph& g, const Graph& p) : g_(g), p_(p), image_(p.order()) {}

    bool run() { return place(0, 0); }
    Embedding take() { return std::move(image_); }

  private:
    bool place(int i, Mask used) {
        if (i == p_.order()) return true;
        for (Mask cand = g_.all() & ~used; cand; cand &= cand - 1) {
            int v = lowest(cand);
            if (g_.degree(v) < p_.degree(i)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = g_.adjacent(image_[j], v) == p_.adjacent(j, i);
            if (!ok) continue;
            image_[i] = v;
            if (place(i + 1, used | bit(v))) return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& p_;
    Embedding image_;
};

} // namespace

std::string fnv1a_hex(std::string_view text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

PatternCatalog PatternCatalog::parse(std::string_view text) {
    PatternCatalog cat;
    cat.hash_ = fnv1a_hex(text);
    int number = 0;
    std::set<std::string> names;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto hash = raw.find('#');
        auto body = trim(raw.substr(0, hash));
        if (body.empty()) continue;
        Pattern p = parse_line(body, number);
        if (!names.insert(p.name).second) throw PatternError(number, "duplicate pattern name " + p.name);
        cat.patterns_.push_back(std::move(p));
    }
    return cat;
}

PatternCatalog PatternCatalog::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open pattern catalog " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

const PatternCatalog& PatternCatalog::builtin() {
    static const PatternCatalog cat = parse(kBuiltinPatterns);
    return cat;
}

const Pattern& PatternCatalog::at(std::string_view name) const {
    for (const auto& p : patterns_)
        if (p.name == name) return p;
    throw std::out_of_range("unknown pattern " + std::string(name));
}

bool PatternCatalog::contains(std::string_view name) const {
    return std::any_of(patterns_.begin(), patterns_.end(), [&](const Pattern& p) { return p.name == name; });
}

std::vector<Pattern> PatternCatalog::family(const std::vector<std::string>& names) const {
    std::vector<Pattern> out;
    for (const auto& n : names) out.push_back(at(n));
    return out;
}

std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern) {
    if (pattern.order() > g.order()) return std::nullopt;
    Matcher m(g, pattern);
    if (!m.run()) return std::nullopt;
    return m.take();
}

std::optional<Embedding> find_induced(const Graph& g, const Pattern& p) {
    return find_induced(g, p.graph());
}

} // namespace abperfect
