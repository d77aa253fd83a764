#pragma once

#include <string>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/characters.hpp"
#include "evchar/ev_sets.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Both sides of a verified identity, exact. `difference` is always
/// lhs - rhs with lhs the alternating even-row side, so regression baselines
/// keep a fixed orientation.
struct IdentityReport {
    std::string name;
    std::string params;  // rendered "key=value, ..." for report output
    BigRat lhs = 0;
    BigRat rhs = 0;
    BigRat difference = 0;
    bool holds = false;
};

/// Weighted column sum: sum over Ev(lambda) of mult * (+-1) * sum over cols
/// of chi(mu, tilde); the sign is (-1)^{l(tilde)} when signed_by_length.
BigInt ev_column_sum(CharEngine& engine, const Partition& lambda,
                     const std::vector<Partition>& cols, bool signed_by_length,
                     int workers = 1);

/// Per-lambda identity: alternating sum over R_{2N+1}(2n) against the plain
/// sum over R^c_{2N}(2n), both weighted over Ev(lambda).
IdentityReport strong_sides(CharEngine& engine, const Partition& lambda, int N,
                            int workers = 1);

/// The z-weighted aggregate over all lambda of n: both sides as exact
/// rationals.
IdentityReport q1_sides(CharEngine& engine, int n, int N, int workers = 1);

/// strong_sides at N = 1, where the right side is the single column (n,n).
IdentityReport conj_n1_check(CharEngine& engine, const Partition& lambda,
                             int workers = 1);

/// z-weighted sum of the (n,n) column over all lambda of n, against the
/// conjectured closed form binom(n/2 + 2, 2) for even n and 0 for odd n.
IdentityReport closed_form_sum(CharEngine& engine, int n, int workers = 1);

/// Character table block: rows indexed by R_3(8), columns by Ev(lambda) in
/// ascending reverse-lexicographic order, plus the derived sum/weight/total
/// rows and the single-column right-hand side.
struct TableReport {
    int which = 1;
    Partition lambda;
    std::vector<Partition> rows;     // R_3(2n)
    std::vector<Partition> columns;  // Ev(lambda), ascending rev-lex
    std::vector<BigInt> multiplicities;
    std::vector<std::vector<BigInt>> cells;  // cells[row][col]
    std::vector<BigInt> column_sums;
    std::vector<BigInt> weights;  // (-1)^length * multiplicity
    std::vector<BigInt> totals;   // column_sum * weight
    BigInt grand_total = 0;
    Partition rhs_row;              // (n,n)
    std::vector<BigInt> rhs_cells;  // chi((n,n), column)
    BigInt rhs_total = 0;           // unsigned multiplicity-weighted sum
};

/// which = 1 reproduces the lambda = (1^4) block, which = 2 the (2,2) block.
TableReport reproduce_table(CharEngine& engine, int which, int workers = 1);

/// Column-set growth report: the partitions entering R_{2N+1}(2n) beyond
/// level N-1 and those entering R^c_{2N}(2n) beyond level N-2, with each
/// side's contribution to the identity.
struct CounterexampleReport {
    Partition lambda;
    int N = 0;
    std::vector<Partition> new_lhs_columns;
    std::vector<Partition> new_rhs_columns;
    BigInt lhs_delta = 0;  // signed contribution of the new columns
    BigInt rhs_delta = 0;
    IdentityReport at_N;
    IdentityReport at_N_minus_1;
    std::string note;
};

CounterexampleReport counterexample_report(CharEngine& engine, const Partition& lambda,
                                           int N, int workers = 1);

}  // namespace evchar
