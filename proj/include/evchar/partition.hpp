#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "evchar/bigint.hpp"

namespace evchar {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. This is the index type for
/// characters, conjugacy classes and symmetric-function bases, so the
/// representation is canonical by construction (no zero parts, ever).
class Partition {
public:
    Partition() = default;

    /// Requires canonical input (weakly decreasing, all parts >= 1).
    explicit Partition(std::vector<int> parts);

    /// Sorts descending and drops zeros; negative parts are rejected.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses the comma format, e.g. "5,2,1"; "" is the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based), 0 beyond the end.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    Partition conjugate() const;

    /// Partition with the first (largest) part removed.
    Partition drop_first() const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Lexicographic on the parts sequence.
    std::strong_ordering operator<=>(const Partition& o) const {
        return parts_ <=> o.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Canonical listing order: reverse-lexicographic, (n) first, (1^n) last.
struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return b < a;
    }
};

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int v : p.parts()) h = h * 1099511628211ULL + static_cast<size_t>(v) + 1;
        return h;
    }
};

/// All partitions of n in reverse-lexicographic order; count is p(n).
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most max_len parts, reverse-lexicographic.
std::vector<Partition> partitions_of_max_length(int n, int max_len);

/// z_lambda = prod_j j^{m_j} m_j!  (centralizer size of cycle type lambda).
BigInt centralizer_size(const Partition& lambda);

/// f^mu = |mu|! / prod of hook lengths (number of standard tableaux).
BigInt hook_degree(const Partition& mu);

}  // namespace evchar
