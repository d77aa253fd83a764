#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "evchar/partition.hpp"
#include "evchar/paths.hpp"
#include "test_util.hpp"

using namespace evchar;

TEST_CASE("Motzkin and Riordan counts") {
    const long motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
    const long riordan[] = {1, 0, 1, 1, 3, 6, 15, 36, 91};
    for (int n = 0; n <= 8; ++n) {
        CHECK(motzkin_count(n) == motzkin[n]);
        CHECK(riordan_count(n) == riordan[n]);
    }
    for (int n = 0; n <= 10; ++n)
        CHECK(motzkin_count(n) == BigInt(riordan_count(n) + riordan_count(n + 1)));

    for (const LatticePath& p : motzkin_enumerate(6)) CHECK(p.is_motzkin());
    for (const LatticePath& p : riordan_enumerate(6)) CHECK(p.is_riordan());
    CHECK(!LatticePath{"F"}.is_riordan());
    CHECK(LatticePath{"F"}.is_motzkin());
    CHECK(!LatticePath{"UDF"}.is_riordan());
    CHECK(LatticePath{"UFD"}.is_riordan());
    CHECK(!LatticePath{"DU"}.is_motzkin());
    CHECK(!LatticePath{"UU"}.is_motzkin());
}

TEST_CASE("the six length-5 Riordan paths") {
    std::set<std::string> got;
    for (const LatticePath& p : riordan_enumerate(5)) got.insert(p.steps);
    std::set<std::string> want = {"UUFDD", "UDUFD", "UFFFD", "UFDUD", "UUDFD", "UFUDD"};
    CHECK(got == want);
}

TEST_CASE("path to tableau worked example") {
    StandardTableau t = riordan_to_tableau({"UUFDFDUFD"});
    std::vector<std::vector<int>> want = {{1, 2, 7}, {3, 5, 8}, {4}, {6}, {9}};
    CHECK(t.rows == want);
    CHECK(t.shape() == Partition({3, 3, 1, 1, 1}));
    CHECK(tableau_to_riordan(t).steps == "UUFDFDUFD");

    CHECK_THROWS_AS(riordan_to_tableau({"FUD"}), std::invalid_argument);
    StandardTableau bad_shape;
    bad_shape.rows = {{1, 2, 3}, {4}};
    CHECK_THROWS_AS(tableau_to_riordan(bad_shape), std::invalid_argument);
    StandardTableau not_standard;
    not_standard.rows = {{1, 3}, {2, 2}};
    CHECK_THROWS_AS(tableau_to_riordan(not_standard), std::invalid_argument);
}

TEST_CASE("bijection roundtrip and refined counts") {
    for (int n = 0; n <= 8; ++n) {
        std::map<std::pair<int, int>, long> refined;
        for (const LatticePath& p : riordan_enumerate(n)) {
            StandardTableau t = riordan_to_tableau(p);
            CHECK(t.is_valid());
            CHECK(tableau_to_riordan(t).steps == p.steps);
            if (n > 0) {
                CHECK(t.size() == n);
                ++refined[{p.up_count(), p.flat_count()}];
            }
        }
        for (const auto& [km, count] : refined) {
            std::vector<int> parts{km.first, km.first};
            for (int i = 0; i < km.second; ++i) parts.push_back(1);
            CHECK(BigInt(count) == hook_degree(Partition(parts)));
        }
    }

    // inverse direction over every tableau of the eligible shapes
    for (int k = 1; k <= 3; ++k)
        for (int m = 0; m <= 3; ++m) {
            std::vector<int> parts{k, k};
            for (int i = 0; i < m; ++i) parts.push_back(1);
            Partition shape(parts);
            for (const auto& rows : testutil::enumerate_syt(shape)) {
                StandardTableau t{rows};
                LatticePath p = tableau_to_riordan(t);
                CHECK(p.is_riordan());
                CHECK(riordan_to_tableau(p).rows == rows);
            }
        }
}

TEST_CASE("ballot sequences") {
    CHECK(ballot_enumerate(4).size() == 9);
    CHECK(matching_parity_count(4) == 3);
    CHECK(matching_parity_count(1) == 0);
    for (int n = 0; n <= 8; ++n) {
        auto seqs = ballot_enumerate(n);
        CHECK(BigInt(seqs.size()) == motzkin_count(n));
        for (const auto& b : seqs) CHECK(b.is_valid());
    }
    CHECK(!BallotSequence{"B"}.is_valid());
    CHECK(!BallotSequence{"ACB"}.is_valid());
    CHECK(BallotSequence{"ABC"}.is_valid());
}

TEST_CASE("parity completion") {
    CHECK(ballot_parity_completion(BallotSequence{"A"}).votes == "AA");
    CHECK(ballot_parity_completion(BallotSequence{"ABA"}).votes == "ABAB");
    CHECK_THROWS_AS(ballot_parity_completion(BallotSequence{"ABC"}), std::invalid_argument);
    CHECK_THROWS_AS(ballot_parity_completion(BallotSequence{""}), std::invalid_argument);

    // the completion is injective and lands exactly on the matching-parity
    // sequences one step longer
    for (int n = 0; n <= 10; ++n) {
        std::set<std::string> images;
        long non_matching = 0;
        for (const auto& b : ballot_enumerate(n)) {
            if (b.matching_parity()) continue;
            ++non_matching;
            BallotSequence done = ballot_parity_completion(b);
            CHECK(done.votes.size() == static_cast<size_t>(n) + 1);
            CHECK(done.matching_parity());
            images.insert(done.votes);
        }
        CHECK(BigInt(images.size()) == BigInt(non_matching));
        CHECK(BigInt(images.size()) == matching_parity_count(n + 1));
    }
}

TEST_CASE("ballot to tableau") {
    StandardTableau row = ballot_to_tableau(BallotSequence{"AAA"});
    CHECK(row.rows == std::vector<std::vector<int>>{{1, 2, 3}});

    StandardTableau t = ballot_to_tableau(BallotSequence{"ABACBC"});
    CHECK(t.shape() == Partition({2, 2, 2}));
    CHECK(t.is_valid());

    for (int n = 1; n <= 10; ++n)
        for (const auto& b : ballot_enumerate(n)) {
            StandardTableau tab = ballot_to_tableau(b);
            CHECK(tab.is_valid());
            Partition shape = tab.shape();
            bool parity_match = (shape.part(0) % 2 == shape.part(1) % 2) &&
                                (shape.part(1) % 2 == shape.part(2) % 2);
            CHECK(parity_match == b.matching_parity());
        }
}

TEST_CASE("degree sums with parity conditions") {
    CHECK(sum_f_matching_parity_shapes(4) == 3);
    CHECK(sum_f_two_column_hooks(4) == 3);
    CHECK(sum_f_matching_parity_shapes(5) == 6);
    CHECK(sum_f_two_column_hooks(5) == 6);
    for (int n = 1; n <= 10; ++n) {
        BigInt r = riordan_count(n);
        CHECK(sum_f_matching_parity_shapes(n) == r);
        CHECK(sum_f_two_column_hooks(n) == r);
    }
}
