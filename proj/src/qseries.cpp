#include "evchar/qseries.hpp"

#include <stdexcept>

#include "evchar/ev_sets.hpp"
#include "evchar/identities.hpp"
#include "evchar/parallel.hpp"

namespace evchar {

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.at(0) = 1;
    return s;
}

TruncatedSeries& TruncatedSeries::add_scaled(const TruncatedSeries& other, const BigRat& scale) {
    if (order() != other.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    for (int k = 0; k <= order(); ++k) at(k) += other.at(k) * scale;
    return *this;
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& other) const {
    if (order() != other.order())
        throw std::invalid_argument("TruncatedSeries: order mismatch");
    TruncatedSeries out(order());
    for (int i = 0; i <= order(); ++i) {
        if (at(i) == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (other.at(j) == 0) continue;
            out.at(i + j) += at(i) * other.at(j);
        }
    }
    return out;
}

bool TruncatedSeries::all_integral() const {
    for (const BigRat& c : coeffs_)
        if (!is_integral(c)) return false;
    return true;
}

TruncatedSeries g_series(const Partition& lambda, int order) {
    if (order < 0) throw std::invalid_argument("g_series: order must be >= 0");
    TruncatedSeries f = TruncatedSeries::one(order);
    for (int part : lambda.parts()) {
        // q^a / (1 + q^a) = q^a - q^{2a} + q^{3a} - ...
        TruncatedSeries factor(order);
        int sign = 1;
        for (long e = part; e <= order; e += part) {
            factor.at(static_cast<int>(e)) = sign;
            sign = -sign;
        }
        f = f.mul(factor);
    }
    return f;
}

std::pair<TruncatedSeries, TruncatedSeries> conj_q_sides(CharEngine& engine, int N,
                                                         int order, int workers) {
    if (N < 1 || order < 0) throw std::invalid_argument("conj_q_sides: bad N or order");
    TruncatedSeries lhs = TruncatedSeries::one(order);  // n = 0 term
    TruncatedSeries rhs = TruncatedSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        const std::vector<Partition> lambdas = partitions_of(n);
        struct Sides {
            BigInt lhs, rhs;
        };
        std::vector<Sides> sides = parallel_map<Sides>(
            workers, lambdas.size(), [&](size_t i) -> Sides {
                const Partition& lambda = lambdas[i];
                return {ev_column_sum(engine, lambda, r_even_rows(2 * N + 1, 2 * n), true),
                        ev_column_sum(engine, lambda, r_even_cols(2 * N, 2 * n), false)};
            });
        for (size_t i = 0; i < lambdas.size(); ++i) {
            BigRat z(centralizer_size(lambdas[i]));
            TruncatedSeries g = g_series(lambdas[i], order);
            lhs.add_scaled(g, BigRat(sides[i].lhs) / z);
            rhs.add_scaled(g, BigRat(sides[i].rhs) / z);
        }
    }
    return {lhs, rhs};
}

}  // namespace evchar
