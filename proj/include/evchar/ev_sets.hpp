#pragma once

#include <map>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Multiset of partitions with positive multiplicities, iterated in
/// reverse-lexicographic order.
using WeightedPartitions = std::map<Partition, BigInt, RevLexLess>;

/// Ev(lambda): every part is replaced by either its double or by two copies
/// of itself. Stored grouped: for each distinct part size c of multiplicity
/// d, choosing k parts to double contributes binom(d,k), so the total weight
/// is 2^{l(lambda)} without materializing the 2^l tuples individually.
/// Every key is a partition of 2|lambda|. Throws on the empty partition.
WeightedPartitions ev(const Partition& lambda);

/// R_N(2n): partitions of two_n with at most N parts, all parts even.
/// Reverse-lexicographic; throws if two_n is odd.
std::vector<Partition> r_even_rows(int N, int two_n);

/// R^c_N(2n): partitions of two_n with at most N parts, all columns even
/// (equivalently every part multiplicity is even). Reverse-lexicographic;
/// throws if two_n is odd.
std::vector<Partition> r_even_cols(int N, int two_n);

}  // namespace evchar
