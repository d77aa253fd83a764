#pragma once

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Irreducible symmetric-group character values chi^mu_lambda by the
/// Murnaghan-Nakayama recursion, with a process-wide memo cache. The
/// recursion strips border strips from mu in decreasing cycle order of
/// lambda, so every cached key is a pair of canonical partitions.
///
/// chi() is logically pure; the cache takes a shared lock for reads and an
/// exclusive lock for inserts, and duplicate inserts of the same value are
/// harmless, so any number of threads may query concurrently.
class CharEngine {
public:
    /// chi^mu_lambda, exact. Throws std::invalid_argument on |mu| != |lambda|.
    BigInt chi(const Partition& mu, const Partition& lambda);

    /// Sum of chi(mu, lambda) over mus; parallel over mus, reduced in order.
    BigInt chi_column_sum(std::span<const Partition> mus, const Partition& lambda,
                          int workers = 1);

    size_t cache_size() const;
    void clear_cache();

    /// Cache file: one header line "evchar-cache <version>", then records
    /// "mu;lambda;value" in the comma partition format. A missing file is a
    /// cold start; a version mismatch is skipped with a warning; a corrupt
    /// line throws with its line number.
    void load_cache(const std::string& path, std::string* warning = nullptr);
    size_t save_cache(const std::string& path) const;

    static constexpr int kCacheVersion = 1;

private:
    struct Key {
        std::vector<int> data;  // mu parts, -1, lambda parts
        bool operator==(const Key& o) const { return data == o.data; }
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = 0x9e3779b97f4a7c15ULL;
            for (int v : k.data) h = h * 1099511628211ULL + static_cast<size_t>(v + 2);
            return h;
        }
    };

    static Key make_key(const Partition& mu, const Partition& lambda);

    BigInt chi_rec(const Partition& mu, const Partition& lambda);

    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, BigInt, KeyHash> cache_;
};

}  // namespace evchar
