#include "evchar/characters.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "evchar/parallel.hpp"

namespace evchar {

CharEngine::Key CharEngine::make_key(const Partition& mu, const Partition& lambda) {
    Key k;
    k.data.reserve(mu.parts().size() + lambda.parts().size() + 1);
    k.data.insert(k.data.end(), mu.parts().begin(), mu.parts().end());
    k.data.push_back(-1);
    k.data.insert(k.data.end(), lambda.parts().begin(), lambda.parts().end());
    return k;
}

BigInt CharEngine::chi(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("chi: |mu| = " + std::to_string(mu.size()) +
                                    " but |lambda| = " + std::to_string(lambda.size()));
    return chi_rec(mu, lambda);
}

BigInt CharEngine::chi_rec(const Partition& mu, const Partition& lambda) {
    if (mu.empty()) return 1;

    Key key = make_key(mu, lambda);
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    const int strip = lambda.parts()[0];
    const Partition rest = lambda.drop_first();
    const int m = mu.length();

    // First-column hook lengths ("beta set") of mu: strictly decreasing.
    // A border strip of size `strip` is removable iff some beta value b has
    // b - strip >= 0 and b - strip not in the set; the strip spans one row
    // per beta value in (b - strip, b], so height = #values strictly between.
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) beta[static_cast<size_t>(i)] = mu.part(i) + (m - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < m; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int target = b - strip;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

        int height = 0;
        for (int v : beta)
            if (v > target && v < b) ++height;

        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        std::vector<int> nparts;
        nparts.reserve(static_cast<size_t>(m));
        for (int j = 0; j < m; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (m - 1 - j);
            if (part > 0) nparts.push_back(part);
        }
        Partition nmu(std::move(nparts));

        BigInt sub = chi_rec(nmu, rest);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }

    {
        std::unique_lock lock(mutex_);
        cache_.emplace(std::move(key), total);
    }
    return total;
}

BigInt CharEngine::chi_column_sum(std::span<const Partition> mus, const Partition& lambda,
                                  int workers) {
    for (const Partition& mu : mus)
        if (mu.size() != lambda.size())
            throw std::invalid_argument("chi_column_sum: |mu| = " + std::to_string(mu.size()) +
                                        " but |lambda| = " + std::to_string(lambda.size()));
    std::vector<BigInt> values = parallel_map<BigInt>(
        workers, mus.size(), [&](size_t i) { return chi(mus[i], lambda); });
    BigInt total = 0;
    for (const BigInt& v : values) total += v;
    return total;
}

size_t CharEngine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void CharEngine::clear_cache() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

namespace {

std::pair<Partition, Partition> split_key(const std::vector<int>& data) {
    auto sep = std::find(data.begin(), data.end(), -1);
    return {Partition(std::vector<int>(data.begin(), sep)),
            Partition(std::vector<int>(sep + 1, data.end()))};
}

}  // namespace

void CharEngine::load_cache(const std::string& path, std::string* warning) {
    std::ifstream in(path);
    if (!in) return;  // missing file: cold start

    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ":1: empty cache file");
    {
        std::istringstream hs(line);
        std::string tag;
        int version = -1;
        hs >> tag >> version;
        if (tag != "evchar-cache") throw std::runtime_error(path + ":1: not a cache file");
        if (version != kCacheVersion) {
            if (warning)
                *warning = "cache version " + std::to_string(version) + " != " +
                           std::to_string(kCacheVersion) + ", ignoring " + path;
            return;
        }
    }

    size_t lineno = 1;
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        size_t p1 = line.find(';');
        size_t p2 = (p1 == std::string::npos) ? std::string::npos : line.find(';', p1 + 1);
        if (p2 == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": corrupt cache line");
        try {
            Partition mu = Partition::parse(line.substr(0, p1));
            Partition lambda = Partition::parse(line.substr(p1 + 1, p2 - p1 - 1));
            BigInt value(line.substr(p2 + 1));
            Key k;
            k.data.insert(k.data.end(), mu.parts().begin(), mu.parts().end());
            k.data.push_back(-1);
            k.data.insert(k.data.end(), lambda.parts().begin(), lambda.parts().end());
            cache_.insert_or_assign(std::move(k), std::move(value));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": corrupt cache line: " + e.what());
        }
    }
}

size_t CharEngine::save_cache(const std::string& path) const {
    // Sort records so the file is byte-reproducible for a given cache state.
    std::map<std::pair<Partition, Partition>, BigInt> sorted;
    {
        std::shared_lock lock(mutex_);
        for (const auto& [key, value] : cache_) sorted.emplace(split_key(key.data), value);
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << "evchar-cache " << kCacheVersion << "\n";
    for (const auto& [mulam, value] : sorted)
        out << mulam.first.str() << ';' << mulam.second.str() << ';' << value << "\n";
    return sorted.size();
}

}  // namespace evchar
