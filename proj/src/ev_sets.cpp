#include "evchar/ev_sets.hpp"

#include <stdexcept>

namespace evchar {

namespace {

struct PartGroup {
    int value;
    int mult;
};

void ev_rec(const std::vector<PartGroup>& groups, size_t gi, std::vector<int>& acc,
            BigInt weight, WeightedPartitions& out) {
    if (gi == groups.size()) {
        out[Partition::from_unsorted(acc)] += weight;
        return;
    }
    const auto [c, d] = groups[gi];
    for (int k = 0; k <= d; ++k) {
        size_t mark = acc.size();
        for (int t = 0; t < k; ++t) acc.push_back(2 * c);
        for (int t = 0; t < 2 * (d - k); ++t) acc.push_back(c);
        ev_rec(groups, gi + 1, acc, weight * binomial(d, k), out);
        acc.resize(mark);
    }
}

}  // namespace

WeightedPartitions ev(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("ev: empty partition");
    std::vector<PartGroup> groups;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        groups.push_back({parts[i], static_cast<int>(j - i)});
        i = j;
    }
    WeightedPartitions out;
    std::vector<int> acc;
    ev_rec(groups, 0, acc, 1, out);
    return out;
}

std::vector<Partition> r_even_rows(int N, int two_n) {
    if (N < 1) throw std::invalid_argument("r_even_rows: N must be positive");
    if (two_n < 0 || two_n % 2 != 0)
        throw std::invalid_argument("r_even_rows: size must be even and nonnegative");
    std::vector<Partition> out;
    for (const Partition& nu : partitions_of_max_length(two_n / 2, N)) {
        std::vector<int> doubled;
        doubled.reserve(nu.parts().size());
        for (int p : nu.parts()) doubled.push_back(2 * p);
        out.push_back(Partition(std::move(doubled)));
    }
    return out;
}

std::vector<Partition> r_even_cols(int N, int two_n) {
    if (N < 1) throw std::invalid_argument("r_even_cols: N must be positive");
    if (two_n < 0 || two_n % 2 != 0)
        throw std::invalid_argument("r_even_cols: size must be even and nonnegative");
    // Even column lengths force every part multiplicity to be even, so the
    // members are exactly the partitions of n with <= N/2 parts, each part
    // repeated twice.
    std::vector<Partition> out;
    for (const Partition& nu : partitions_of_max_length(two_n / 2, N / 2)) {
        std::vector<int> repeated;
        repeated.reserve(2 * nu.parts().size());
        for (int p : nu.parts()) {
            repeated.push_back(p);
            repeated.push_back(p);
        }
        out.push_back(Partition(std::move(repeated)));
    }
    return out;
}

}  // namespace evchar
