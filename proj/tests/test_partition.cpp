#include <doctest.h>

#include <set>

#include "evchar/partition.hpp"
#include "test_util.hpp"

using namespace evchar;

TEST_CASE("partition construction and parsing") {
    CHECK(Partition().size() == 0);
    CHECK(Partition().length() == 0);
    CHECK(Partition({5, 2, 1}).size() == 8);
    CHECK(Partition({5, 2, 1}).str() == "5,2,1");
    CHECK(Partition::parse("5,2,1") == Partition({5, 2, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("7") == Partition({7}));
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,1,"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 3, 0, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("partitions_of listing") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition()});

    std::vector<Partition> p4 = partitions_of(4);
    std::vector<Partition> want = {Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                   Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    CHECK(p4 == want);

    CHECK(partitions_of(8).size() == 22);

    // independent enumeration oracle + classical counts
    const long p_table[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) {
        auto got = partitions_of(n);
        CHECK(got.size() == static_cast<size_t>(p_table[n]));
        auto oracle = testutil::naive_partitions(n);
        CHECK(got.size() == oracle.size());
        for (const Partition& p : got) {
            CHECK(oracle.count(p.parts()) == 1);
            CHECK(p.size() == n);
        }
        // reverse-lexicographic: strictly decreasing in lex order
        for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i + 1] < got[i]);
    }

    CHECK(partitions_of_max_length(10, 3).size() == 14);
    for (const Partition& p : partitions_of_max_length(10, 3)) CHECK(p.length() <= 3);
}

TEST_CASE("conjugate") {
    CHECK(Partition({6}).conjugate() == Partition({1, 1, 1, 1, 1, 1}));
    CHECK(Partition({3, 2, 2}).conjugate() == Partition({3, 3, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition().conjugate() == Partition());
    for (int n = 0; n <= 12; ++n)
        for (const Partition& p : partitions_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("centralizer sizes") {
    CHECK(centralizer_size(Partition({1, 1, 1, 1})) == 24);
    CHECK(centralizer_size(Partition({2, 2})) == 8);
    CHECK(centralizer_size(Partition({5, 2, 1})) == 10);
    CHECK(centralizer_size(Partition()) == 1);

    // class sizes partition the group: sum over lambda of n!/z = n!
    for (int n = 1; n <= 12; ++n) {
        BigRat total = 0;
        for (const Partition& lam : partitions_of(n))
            total += BigRat(1) / BigRat(centralizer_size(lam));
        CHECK(total == BigRat(1));
    }
}

TEST_CASE("hook degrees") {
    CHECK(hook_degree(Partition({9})) == 1);
    CHECK(hook_degree(Partition({2, 2})) == 2);
    CHECK(hook_degree(Partition({4, 4})) == 14);
    CHECK(hook_degree(Partition()) == 1);

    // brute-force tableau-filling oracle
    for (int n = 1; n <= 7; ++n)
        for (const Partition& mu : partitions_of(n))
            CHECK(hook_degree(mu) == testutil::count_syt_brute(mu));

    for (int n = 1; n <= 10; ++n) {
        BigInt square_sum = 0;
        for (const Partition& mu : partitions_of(n)) {
            BigInt f = hook_degree(mu);
            CHECK(f == hook_degree(mu.conjugate()));
            square_sum += f * f;
        }
        CHECK(square_sum == factorial(n));
    }
}
