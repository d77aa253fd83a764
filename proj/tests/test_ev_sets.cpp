#include <doctest.h>

#include <algorithm>

#include "evchar/ev_sets.hpp"

using namespace evchar;

TEST_CASE("ev of a single part") {
    WeightedPartitions w = ev(Partition({5}));
    REQUIRE(w.size() == 2);
    CHECK(w.at(Partition({10})) == 1);
    CHECK(w.at(Partition({5, 5})) == 1);
}

TEST_CASE("ev worked examples") {
    WeightedPartitions w = ev(Partition({3, 2, 2}));
    REQUIRE(w.size() == 6);
    CHECK(w.at(Partition({6, 4, 4})) == 1);
    CHECK(w.at(Partition({6, 4, 2, 2})) == 2);
    CHECK(w.at(Partition({6, 2, 2, 2, 2})) == 1);
    CHECK(w.at(Partition({4, 4, 3, 3})) == 1);
    CHECK(w.at(Partition({4, 3, 3, 2, 2})) == 2);
    CHECK(w.at(Partition({3, 3, 2, 2, 2, 2})) == 1);

    WeightedPartitions ones = ev(Partition({1, 1, 1, 1}));
    REQUIRE(ones.size() == 5);
    CHECK(ones.at(Partition({2, 2, 2, 2})) == 1);
    CHECK(ones.at(Partition({2, 2, 2, 1, 1})) == 4);
    CHECK(ones.at(Partition({2, 2, 1, 1, 1, 1})) == 6);
    CHECK(ones.at(Partition({2, 1, 1, 1, 1, 1, 1})) == 4);
    CHECK(ones.at(Partition({1, 1, 1, 1, 1, 1, 1, 1})) == 1);

    WeightedPartitions twos = ev(Partition({2, 2}));
    REQUIRE(twos.size() == 3);
    CHECK(twos.at(Partition({4, 4})) == 1);
    CHECK(twos.at(Partition({4, 2, 2})) == 2);
    CHECK(twos.at(Partition({2, 2, 2, 2})) == 1);

    // binomial products across distinct part sizes
    WeightedPartitions mixed = ev(Partition({3, 3, 3, 3, 2, 2, 2}));
    CHECK(mixed.at(Partition::from_unsorted({6, 6, 3, 3, 3, 3, 4, 2, 2, 2, 2})) == 18);
}

TEST_CASE("ev invariants") {
    CHECK_THROWS_AS(ev(Partition()), std::invalid_argument);

    // grouped storage: one entry per doubling count, not 2^15 tuples
    WeightedPartitions tall = ev(Partition(std::vector<int>(15, 1)));
    CHECK(tall.size() == 16);
    BigInt tall_total = 0;
    for (const auto& [tilde, mult] : tall) tall_total += mult;
    CHECK(tall_total == BigInt(1) << 15);
    for (int n = 1; n <= 10; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            BigInt total = 0;
            for (const auto& [tilde, mult] : ev(lambda)) {
                CHECK(tilde.size() == 2 * n);
                CHECK(mult > 0);
                total += mult;
            }
            CHECK(total == BigInt(1) << lambda.length());
        }
}

TEST_CASE("even-row sets") {
    CHECK(r_even_rows(3, 10) ==
          std::vector<Partition>{Partition({10}), Partition({8, 2}), Partition({6, 4}),
                                 Partition({6, 2, 2}), Partition({4, 4, 2})});
    CHECK(r_even_rows(3, 8) == std::vector<Partition>{Partition({8}), Partition({6, 2}),
                                                      Partition({4, 4}), Partition({4, 2, 2})});
    CHECK(r_even_rows(1, 6) == std::vector<Partition>{Partition({6})});
    CHECK_THROWS_AS(r_even_rows(3, 7), std::invalid_argument);

    for (const Partition& mu : r_even_rows(5, 12))
        for (int part : mu.parts()) CHECK(part % 2 == 0);
}

TEST_CASE("even-column sets") {
    CHECK(r_even_cols(4, 10) == std::vector<Partition>{Partition({5, 5}), Partition({4, 4, 1, 1}),
                                                       Partition({3, 3, 2, 2})});
    CHECK(r_even_cols(2, 8) == std::vector<Partition>{Partition({4, 4})});
    for (int n = 1; n <= 8; ++n)
        CHECK(r_even_cols(2, 2 * n) == std::vector<Partition>{Partition({n, n})});
    CHECK_THROWS_AS(r_even_cols(2, 9), std::invalid_argument);

    for (const Partition& mu : r_even_cols(6, 12)) {
        Partition conj = mu.conjugate();
        for (int col : conj.parts()) CHECK(col % 2 == 0);
    }
}

TEST_CASE("stabilization and conjugate pairing") {
    for (int n = 1; n <= 8; ++n) {
        const int two_n = 2 * n;
        CHECK(r_even_rows(n, two_n) == r_even_rows(n + 3, two_n));
        CHECK(r_even_cols(2 * n, two_n) == r_even_cols(2 * n + 3, two_n));

        // at full depth the two sets are exact conjugates
        std::vector<Partition> rows = r_even_rows(two_n, two_n);
        std::vector<Partition> cols = r_even_cols(two_n, two_n);
        REQUIRE(rows.size() == cols.size());
        std::vector<Partition> conj;
        for (const Partition& mu : rows) conj.push_back(mu.conjugate());
        std::sort(conj.begin(), conj.end());
        std::vector<Partition> cols_sorted = cols;
        std::sort(cols_sorted.begin(), cols_sorted.end());
        CHECK(conj == cols_sorted);
    }
}
