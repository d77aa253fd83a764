#include <doctest.h>

#include "evchar/qseries.hpp"

using namespace evchar;

TEST_CASE("series arithmetic") {
    TruncatedSeries one = TruncatedSeries::one(3);
    CHECK(one.at(0) == BigRat(1));
    CHECK(one.at(3) == BigRat(0));

    TruncatedSeries a(1);
    a.at(0) = 1;
    a.at(1) = 1;
    TruncatedSeries b(1);
    b.at(0) = 1;
    b.at(1) = -1;
    TruncatedSeries prod = a.mul(b);  // (1+q)(1-q) truncated after q
    CHECK(prod.at(0) == BigRat(1));
    CHECK(prod.at(1) == BigRat(0));

    TruncatedSeries other(2);
    CHECK_THROWS_AS(a.mul(other), std::invalid_argument);
    CHECK_THROWS_AS(a.add_scaled(other, 1), std::invalid_argument);

    TruncatedSeries thirds(1);
    thirds.at(0) = BigRat(1) / BigRat(3);
    CHECK(!thirds.all_integral());
    CHECK(one.all_integral());
}

TEST_CASE("g series") {
    TruncatedSeries empty = g_series(Partition(), 5);
    CHECK(empty == TruncatedSeries::one(5));

    TruncatedSeries g1 = g_series(Partition({1}), 4);
    CHECK(g1.at(0) == BigRat(0));
    CHECK(g1.at(1) == BigRat(1));
    CHECK(g1.at(2) == BigRat(-1));
    CHECK(g1.at(3) == BigRat(1));
    CHECK(g1.at(4) == BigRat(-1));

    TruncatedSeries g2 = g_series(Partition({2}), 6);
    CHECK(g2.at(2) == BigRat(1));
    CHECK(g2.at(3) == BigRat(0));
    CHECK(g2.at(4) == BigRat(-1));
    CHECK(g2.at(6) == BigRat(1));

    // leading term sits at q^{|lambda|}
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            TruncatedSeries g = g_series(lambda, 8);
            for (int k = 0; k < n; ++k) CHECK(g.at(k) == BigRat(0));
            CHECK(g.at(n) == BigRat(1));
        }
}

TEST_CASE("q-identity sides") {
    CharEngine engine;

    // with the outer sum cut at order 1, both sides collapse to 1
    for (int N = 1; N <= 3; ++N) {
        auto [lhs, rhs] = conj_q_sides(engine, N, 1);
        CHECK(lhs == TruncatedSeries::one(1));
        CHECK(rhs == TruncatedSeries::one(1));
    }

    const long printed[] = {1, 0, 3, -4, 9, -12, 22, -36};
    auto [lhs, rhs] = conj_q_sides(engine, 1, 7);
    for (int k = 0; k <= 7; ++k) {
        CHECK(lhs.at(k) == BigRat(printed[k]));
        CHECK(rhs.at(k) == BigRat(printed[k]));
    }
    CHECK(lhs.all_integral());

    auto [lhs2, rhs2] = conj_q_sides(engine, 2, 6);
    CHECK(lhs2 == rhs2);
    CHECK(lhs2.all_integral());

    // integer coefficients persist at N = 3
    auto [lhs3, rhs3] = conj_q_sides(engine, 3, 6);
    CHECK(lhs3.all_integral());
    CHECK(rhs3.all_integral());
    CHECK(lhs3 == rhs3);

    // determinism across worker counts
    auto [lhs_w, rhs_w] = conj_q_sides(engine, 1, 6, 4);
    auto [lhs_s, rhs_s] = conj_q_sides(engine, 1, 6, 1);
    CHECK(lhs_w == lhs_s);
    CHECK(rhs_w == rhs_s);
}
