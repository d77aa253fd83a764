#pragma once

#include <array>
#include <string>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Motzkin path: steps U/F/D, never below the axis, ending on it. The
/// Riordan restriction additionally forbids F at height 0.
struct LatticePath {
    std::string steps;  // over {U,F,D}

    bool is_motzkin() const;
    bool is_riordan() const;
    int up_count() const;
    int flat_count() const;
};

/// Word over {A,B,C} with every prefix satisfying #A >= #B >= #C.
struct BallotSequence {
    std::string votes;

    bool is_valid() const;
    /// Final counts (#A, #B, #C).
    std::array<int, 3> counts() const;
    /// True iff #A, #B, #C are pairwise congruent mod 2.
    bool matching_parity() const;
};

/// Rows of an SYT: increasing left-to-right and top-to-bottom, entries 1..n.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    bool is_valid() const;
    Partition shape() const;
    int size() const;
};

std::vector<LatticePath> motzkin_enumerate(int n);
BigInt motzkin_count(int n);

std::vector<LatticePath> riordan_enumerate(int n);
BigInt riordan_count(int n);

/// A Riordan path with k ups and m flats maps to an SYT of shape (k,k,1^m):
/// row 1 holds the U positions, the forced cell (2,1) stands for the final
/// D, and the remaining entries interleave as F (first column) / D (row 2)
/// in order. Mutually inverse with tableau_to_riordan; both validate input.
StandardTableau riordan_to_tableau(const LatticePath& path);
LatticePath tableau_to_riordan(const StandardTableau& t);

std::vector<BallotSequence> ballot_enumerate(int n);
/// Number of ballot sequences of length n with matching parity, r(n).
BigInt matching_parity_count(int n);

/// For a sequence with exactly one candidate whose vote parity differs from
/// the other two, appends that candidate's letter; the result is a valid
/// matching-parity sequence of length n+1 and the map is injective. Throws
/// if the input already has matching parity.
BallotSequence ballot_parity_completion(const BallotSequence& b);

/// Entry i goes to row j when vote i is for the j-th candidate; row lengths
/// are the vote counts.
StandardTableau ballot_to_tableau(const BallotSequence& b);

/// Sum of f^lambda over partitions of n with at most three parts whose parts
/// (zeros included) are congruent mod 2.
BigInt sum_f_matching_parity_shapes(int n);

/// Sum of f^{(k,k,1^{n-2k})} for 1 <= k <= n/2.
BigInt sum_f_two_column_hooks(int n);

}  // namespace evchar
