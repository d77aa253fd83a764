#include "evchar/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "evchar/parallel.hpp"

namespace evchar {

BigInt ev_column_sum(CharEngine& engine, const Partition& lambda,
                     const std::vector<Partition>& cols, bool signed_by_length,
                     int workers) {
    const WeightedPartitions weighted = ev(lambda);
    struct Item {
        const Partition* tilde;
        const Partition* mu;
    };
    std::vector<Item> items;
    items.reserve(weighted.size() * cols.size());
    for (const auto& [tilde, mult] : weighted)
        for (const Partition& mu : cols) items.push_back({&tilde, &mu});

    std::vector<BigInt> values = parallel_map<BigInt>(
        workers, items.size(),
        [&](size_t i) { return engine.chi(*items[i].mu, *items[i].tilde); });

    BigInt total = 0;
    size_t i = 0;
    for (const auto& [tilde, mult] : weighted) {
        BigInt column_sum = 0;
        for (size_t c = 0; c < cols.size(); ++c) column_sum += values[i++];
        BigInt w = mult;
        if (signed_by_length && tilde.length() % 2) w = -w;
        total += w * column_sum;
    }
    return total;
}

namespace {

IdentityReport make_report(std::string name, std::string params, BigRat lhs, BigRat rhs) {
    IdentityReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.difference = r.lhs - r.rhs;
    r.holds = (r.difference == 0);
    return r;
}

}  // namespace

IdentityReport strong_sides(CharEngine& engine, const Partition& lambda, int N, int workers) {
    if (N < 1) throw std::invalid_argument("strong_sides: N must be >= 1");
    const int two_n = 2 * lambda.size();
    BigInt lhs = ev_column_sum(engine, lambda, r_even_rows(2 * N + 1, two_n), true, workers);
    BigInt rhs = ev_column_sum(engine, lambda, r_even_cols(2 * N, two_n), false, workers);
    return make_report("strong", "lambda=(" + lambda.str() + "), N=" + std::to_string(N),
                       BigRat(lhs), BigRat(rhs));
}

IdentityReport q1_sides(CharEngine& engine, int n, int N, int workers) {
    if (n < 1 || N < 1) throw std::invalid_argument("q1_sides: n, N must be >= 1");
    const std::vector<Partition> lambdas = partitions_of(n);
    BigRat lhs = 0, rhs = 0;
    for (const Partition& lambda : lambdas) {
        IdentityReport inner = strong_sides(engine, lambda, N, workers);
        BigRat z(centralizer_size(lambda));
        lhs += inner.lhs / z;
        rhs += inner.rhs / z;
    }
    return make_report("q1", "n=" + std::to_string(n) + ", N=" + std::to_string(N), lhs, rhs);
}

IdentityReport conj_n1_check(CharEngine& engine, const Partition& lambda, int workers) {
    const int n = lambda.size();
    BigInt lhs = ev_column_sum(engine, lambda, r_even_rows(3, 2 * n), true, workers);
    BigInt rhs = ev_column_sum(engine, lambda, {Partition({n, n})}, false, workers);
    return make_report("n1", "lambda=(" + lambda.str() + ")", BigRat(lhs), BigRat(rhs));
}

IdentityReport closed_form_sum(CharEngine& engine, int n, int workers) {
    if (n < 1) throw std::invalid_argument("closed_form_sum: n must be >= 1");
    BigRat computed = 0;
    for (const Partition& lambda : partitions_of(n)) {
        BigInt col = ev_column_sum(engine, lambda, {Partition({n, n})}, false, workers);
        computed += BigRat(col) / BigRat(centralizer_size(lambda));
    }
    BigRat conjectured = (n % 2 == 0) ? BigRat(binomial(n / 2 + 2, 2)) : BigRat(0);
    return make_report("closed-form", "n=" + std::to_string(n), computed, conjectured);
}

TableReport reproduce_table(CharEngine& engine, int which, int workers) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("reproduce_table: which must be 1 or 2");
    TableReport t;
    t.which = which;
    t.lambda = (which == 1) ? Partition({1, 1, 1, 1}) : Partition({2, 2});
    const int two_n = 2 * t.lambda.size();
    t.rows = r_even_rows(3, two_n);
    t.rhs_row = Partition({t.lambda.size(), t.lambda.size()});

    // ascending reverse-lexicographic columns, as the table blocks are read
    const WeightedPartitions weighted = ev(t.lambda);
    for (auto it = weighted.rbegin(); it != weighted.rend(); ++it) {
        t.columns.push_back(it->first);
        t.multiplicities.push_back(it->second);
    }

    struct Item {
        const Partition* mu;
        const Partition* tilde;
    };
    std::vector<Item> items;
    for (const Partition& mu : t.rows)
        for (const Partition& tilde : t.columns) items.push_back({&mu, &tilde});
    for (const Partition& tilde : t.columns) items.push_back({&t.rhs_row, &tilde});
    std::vector<BigInt> values = parallel_map<BigInt>(
        workers, items.size(),
        [&](size_t i) { return engine.chi(*items[i].mu, *items[i].tilde); });

    size_t idx = 0;
    t.cells.resize(t.rows.size());
    for (size_t r = 0; r < t.rows.size(); ++r) {
        t.cells[r].resize(t.columns.size());
        for (size_t c = 0; c < t.columns.size(); ++c) t.cells[r][c] = values[idx++];
    }
    t.rhs_cells.resize(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); ++c) t.rhs_cells[c] = values[idx++];

    t.column_sums.assign(t.columns.size(), 0);
    t.weights.resize(t.columns.size());
    t.totals.resize(t.columns.size());
    for (size_t c = 0; c < t.columns.size(); ++c) {
        for (size_t r = 0; r < t.rows.size(); ++r) t.column_sums[c] += t.cells[r][c];
        t.weights[c] = (t.columns[c].length() % 2) ? -t.multiplicities[c] : t.multiplicities[c];
        t.totals[c] = t.column_sums[c] * t.weights[c];
        t.grand_total += t.totals[c];
        t.rhs_total += t.rhs_cells[c] * t.multiplicities[c];
    }
    return t;
}

CounterexampleReport counterexample_report(CharEngine& engine, const Partition& lambda,
                                           int N, int workers) {
    if (N < 2) throw std::invalid_argument("counterexample_report: N must be >= 2");
    CounterexampleReport rep;
    rep.lambda = lambda;
    rep.N = N;
    const int two_n = 2 * lambda.size();

    auto set_difference = [](std::vector<Partition> big, const std::vector<Partition>& small) {
        std::vector<Partition> out;
        for (Partition& p : big)
            if (std::find(small.begin(), small.end(), p) == small.end())
                out.push_back(std::move(p));
        return out;
    };
    rep.new_lhs_columns =
        set_difference(r_even_rows(2 * N + 1, two_n), r_even_rows(2 * N - 1, two_n));
    rep.new_rhs_columns =
        set_difference(r_even_cols(2 * N, two_n), r_even_cols(2 * N - 2, two_n));

    rep.lhs_delta = ev_column_sum(engine, lambda, rep.new_lhs_columns, true, workers);
    rep.rhs_delta = ev_column_sum(engine, lambda, rep.new_rhs_columns, false, workers);
    rep.at_N = strong_sides(engine, lambda, N, workers);
    rep.at_N_minus_1 = strong_sides(engine, lambda, N - 1, workers);
    rep.note =
        "difference is lhs - rhs; the level-" + std::to_string(N) +
        " difference equals the level-" + std::to_string(N - 1) +
        " difference plus lhs_delta - rhs_delta (orientation derived from the "
        "per-side contribution accounting)";
    return rep;
}

}  // namespace evchar
