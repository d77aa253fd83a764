#pragma once

#include <utility>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/characters.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Power series in q truncated at a fixed order, exact rational
/// coefficients c_0..c_order. All arithmetic truncates consistently.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(static_cast<size_t>(order) + 1, BigRat(0)) {}

    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    BigRat& at(int k) { return coeffs_[static_cast<size_t>(k)]; }
    const BigRat& at(int k) const { return coeffs_[static_cast<size_t>(k)]; }

    bool operator==(const TruncatedSeries& o) const = default;

    TruncatedSeries& add_scaled(const TruncatedSeries& other, const BigRat& scale);
    TruncatedSeries mul(const TruncatedSeries& other) const;
    bool all_integral() const;

private:
    std::vector<BigRat> coeffs_;
};

/// g_lambda(q) = prod_j q^{lambda_j} / (1 + q^{lambda_j}), truncated. The
/// leading term sits at q^{|lambda|}; the empty product is 1.
TruncatedSeries g_series(const Partition& lambda, int order);

/// Both sides of the q-identity for a given N: outer sums truncated to
/// n <= order, the n = 0 term contributing the constant 1 to each side.
std::pair<TruncatedSeries, TruncatedSeries> conj_q_sides(CharEngine& engine, int N,
                                                         int order, int workers = 1);

}  // namespace evchar
