#include <algorithm>
#include <mutex>

#include "abperfect/enumerate.hpp"
#include "abperfect/graph6.hpp"
#include "abperfect/perfection.hpp"

namespace abperfect {

int pair_index(Param a, Param b) {
    int i = static_cast<int>(a);
    int j = static_cast<int>(b);
    if (i == j) throw std::invalid_argument("a parameter pair needs two distinct parameters");
    if (i > j) std::swap(i, j);
    return i * (2 * kParamCount - i - 1) / 2 + (j - i - 1);
}

std::uint64_t equality_mask(const ParameterProfile& p) {
    const auto v = p.values();
    std::uint64_t m = 0;
    for (int i = 0; i < kParamCount; ++i)
        for (int j = i + 1; j < kParamCount; ++j)
            if (v[i] == v[j]) m |= std::uint64_t{1} << pair_index(kAllParams[i], kAllParams[j]);
    return m;
}

std::uint64_t HereditaryIndex::mask(const Graph& g) {
    auto key = canonical_key(g).bytes;
    return mask_canonical(key, parse_graph6(key));
}

std::uint64_t HereditaryIndex::mask_canonical(const std::string& key, const Graph& canonical) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    std::uint64_t m = equality_mask(cache_.profile(canonical));
    if (canonical.order() > 1) {
        for (int v = 0; v < canonical.order() && m; ++v) {
            const Graph sub = induced_subgraph(canonical, VertexSet(canonical.all() & ~bit(v)));
            auto sub_key = canonical_key(sub).bytes;
            m &= mask_canonical(sub_key, parse_graph6(sub_key));
        }
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(key, m);
    return m;
}

namespace {

// Calls fn(mask) for every k-subset of {0..n-1} in lexicographic order of
// sorted vertex lists; stops when fn returns true.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int v : idx) m |= bit(v);
        if (fn(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

AbResult is_ab_perfect(const Graph& g, Param a, Param b, ProfileCache& cache) {
    if (a == b) throw std::invalid_argument("is_ab_perfect needs two distinct parameters");
    AbResult result;
    for (int size = 1; size <= g.order() && result.perfect; ++size) {
        for_each_combination(g.order(), size, [&](Mask s) {
            const auto p = cache.profile(induced_subgraph(g, VertexSet(s)));
            if (p.get(a) == p.get(b)) return false;
            result.perfect = false;
            result.witness = AbWitness{VertexSet(s), p.get(a), p.get(b)};
            return true;
        });
    }
    return result;
}

bool is_minimal_obstruction(const Graph& g, Param a, Param b, ProfileCache& cache) {
    const auto p = cache.profile(g);
    if (p.get(a) == p.get(b)) return false;
    if (g.order() == 1) return true;
    for (int v = 0; v < g.order(); ++v)
        if (!is_ab_perfect(induced_subgraph(g, VertexSet(g.all() & ~bit(v))), a, b, cache).perfect) return false;
    return true;
}

std::vector<Graph> minimal_obstructions(Param a, Param b, int max_order, ProfileCache& cache) {
    if (a == b) throw std::invalid_argument("minimal_obstructions needs two distinct parameters");
    HereditaryIndex index(cache);
    const int bit_ab = pair_index(a, b);
    std::vector<Graph> out;
    for (const Graph& g : enumerate_up_to(max_order)) {
        const auto p = cache.profile(g);
        if (p.get(a) == p.get(b)) continue;
        bool minimal = true;
        for (int v = 0; v < g.order() && minimal; ++v)
            minimal = (index.mask(induced_subgraph(g, VertexSet(g.all() & ~bit(v)))) >> bit_ab) & 1U;
        if (minimal) out.push_back(g);
    }
    return out;
}

} // namespace abperfect
