#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "abperfect/canonical.hpp"
#include "abperfect/graph.hpp"
#include "abperfect/solvers.hpp"

namespace abperfect {

class CacheError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parameter profiles keyed by canonical graph6. Safe for concurrent use.
class ProfileCache {
  public:
    ProfileCache() = default;
    ProfileCache(const ProfileCache& other);
    ProfileCache& operator=(const ProfileCache& other);

    /// Profile of g, computed on its canonical form on a miss.
    ParameterProfile profile(const Graph& g);
    std::optional<ParameterProfile> find(const CanonicalKey& key) const;
    /// Throws CacheError if the key is present with a different profile.
    void insert(const CanonicalKey& key, const ParameterProfile& p);
    /// Union of both caches; colliding keys must hold equal profiles.
    void merge(const ProfileCache& other);

    std::size_t size() const;
    /// Entries sorted by key.
    std::map<CanonicalKey, ParameterProfile> entries() const;

    /// `<canonical-graph6> <omega> <chi> <h> <psi> <alpha> <b> <B> <Gamma> <gamma>` per line.
    void save(const std::string& path) const;
    /// Throws CacheError naming the line number of a corrupt line.
    static ProfileCache load(const std::string& path);
    static ProfileCache parse(std::istream& in);
    void write(std::ostream& out) const;

    /// Recompute `count` pseudo-randomly chosen entries from scratch; throws
    /// ConsistencyError on any mismatch. Returns how many were checked.
    std::size_t audit(std::size_t count, std::uint64_t seed) const;

    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return misses_; }

  private:
    mutable std::shared_mutex mutex_;
    std::map<CanonicalKey, ParameterProfile> map_;
    std::atomic<std::uint64_t> hits_{0};
    std::atomic<std::uint64_t> misses_{0};
};

/// Bit index of the unordered parameter pair {a, b}, a != b.
int pair_index(Param a, Param b);
/// Bits set for every pair of equal parameters in p.
std::uint64_t equality_mask(const ParameterProfile& p);

/// Memoized "a(H) = b(H) for every induced H" for all 36 parameter pairs at
/// once: the mask of g is its own equality mask ANDed with the masks of its
/// one-vertex-deleted subgraphs.
class HereditaryIndex {
  public:
    explicit HereditaryIndex(ProfileCache& cache) : cache_(cache) {}

    std::uint64_t mask(const Graph& g);
    bool equal(const Graph& g, Param a, Param b) { return (mask(g) >> pair_index(a, b)) & 1U; }
    ProfileCache& cache() { return cache_; }

  private:
    std::uint64_t mask_canonical(const std::string& key, const Graph& canonical);

    ProfileCache& cache_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::uint64_t> memo_;
};

struct AbWitness {
    VertexSet subset;
    int a_value = 0;
    int b_value = 0;
};

struct AbResult {
    bool perfect = true;
    /// Smallest differing subset, ties broken by sorted vertex list.
    std::optional<AbWitness> witness;
};

/// Checks a(H) = b(H) on every nonempty induced subgraph, smallest first.
AbResult is_ab_perfect(const Graph& g, Param a, Param b, ProfileCache& cache);

/// Graphs of order <= max_order with a != b whose proper induced subgraphs
/// all have a = b; sorted by order, then canonical key.
std::vector<Graph> minimal_obstructions(Param a, Param b, int max_order, ProfileCache& cache);

/// True iff a(g) != b(g) and every proper induced subgraph has a = b,
/// checked by full subset scans.
bool is_minimal_obstruction(const Graph& g, Param a, Param b, ProfileCache& cache);

} // namespace abperfect
