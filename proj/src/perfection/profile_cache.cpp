#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "abperfect/graph6.hpp"
#include "abperfect/perfection.hpp"

namespace abperfect {

ProfileCache::ProfileCache(const ProfileCache& other) : map_(other.entries()) {}

ProfileCache& ProfileCache::operator=(const ProfileCache& other) {
    if (this != &other) {
        auto copy = other.entries();
        std::unique_lock lock(mutex_);
        map_ = std::move(copy);
    }
    return *this;
}

ParameterProfile ProfileCache::profile(const Graph& g) {
    auto form = canonical_form(g);
    if (auto hit = find(form.key)) {
        ++hits_;
        return *hit;
    }
    ++misses_;
    const auto p = full_profile(parse_graph6(form.key.bytes));
    insert(form.key, p);
    return p;
}

std::optional<ParameterProfile> ProfileCache::find(const CanonicalKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void ProfileCache::insert(const CanonicalKey& key, const ParameterProfile& p) {
    std::unique_lock lock(mutex_);
    auto [it, fresh] = map_.emplace(key, p);
    if (!fresh && !(it->second == p))
        throw CacheError("conflicting profiles cached for " + key.bytes + "; solver results are not deterministic");
}

void ProfileCache::merge(const ProfileCache& other) {
    for (const auto& [key, p] : other.entries()) insert(key, p);
}

std::size_t ProfileCache::size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
}

std::map<CanonicalKey, ParameterProfile> ProfileCache::entries() const {
    std::shared_lock lock(mutex_);
    return map_;
}

void ProfileCache::write(std::ostream& out) const {
    for (const auto& [key, p] : entries()) {
        out << key.bytes;
        for (int v : p.values()) out << ' ' << v;
        out << '\n';
    }
}

void ProfileCache::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + path);
    write(out);
    if (!out) throw CacheError("failed writing cache file " + path);
}

ProfileCache ProfileCache::parse(std::istream& in) {
    ProfileCache cache;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto bad = [&](const std::string& why) {
            return CacheError("cache line " + std::to_string(number) + ": " + why);
        };
        std::istringstream fields(line);
        std::string key;
        fields >> key;
        Graph g(1);
        try {
            g = parse_graph6(key);
        } catch (const std::exception& e) {
            throw bad(e.what());
        }
        if (canonical_key(g).bytes != key) throw bad("key " + key + " is not in canonical form");
        std::array<int, kParamCount> values{};
        for (int& v : values) {
            if (!(fields >> v)) throw bad("expected nine integer values");
            if (v < 1 || v > g.order()) throw bad("value " + std::to_string(v) + " out of range for order " + std::to_string(g.order()));
        }
        std::string extra;
        if (fields >> extra) throw bad("trailing field '" + extra + "'");
        try {
            cache.insert(CanonicalKey{key}, ParameterProfile::from_values(values));
        } catch (const CacheError& e) {
            throw bad(e.what());
        }
    }
    return cache;
}

ProfileCache ProfileCache::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open cache file " + path);
    return parse(in);
}

std::size_t ProfileCache::audit(std::size_t count, std::uint64_t seed) const {
    const auto all = entries();
    if (all.empty()) return 0;
    std::vector<const std::pair<const CanonicalKey, ParameterProfile>*> items;
    for (const auto& e : all) items.push_back(&e);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& [key, cached] = *items[pick(rng)];
        if (!(full_profile(parse_graph6(key.bytes)) == cached))
            throw ConsistencyError("cached profile for " + key.bytes + " differs from a fresh computation");
    }
    return count;
}

} // namespace abperfect
