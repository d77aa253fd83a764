#include <doctest.h>

#include <algorithm>

#include "evchar/characters.hpp"
#include "evchar/ev_sets.hpp"
#include "evchar/laurent.hpp"
#include "evchar/paths.hpp"
#include "evchar/symfunc.hpp"
#include "oracle_multipoly.hpp"

using namespace evchar;
using testutil::MultiPoly;

namespace {

SymFuncM m11_power(int n) {
    SymFuncM f = SymFuncM::one();
    for (int i = 0; i < n; ++i) f = m_product(f, SymFuncM::monomial(Partition({1, 1})));
    return f;
}

}  // namespace

TEST_CASE("power sums in the m-basis") {
    SymFuncM p_r = power_to_m(Partition({4}));
    CHECK(p_r.coeffs().size() == 1);
    CHECK(p_r.coeff(Partition({4})) == 1);

    SymFuncM p11 = power_to_m(Partition({1, 1}));
    CHECK(p11.coeff(Partition({2})) == 1);
    CHECK(p11.coeff(Partition({1, 1})) == 2);
    CHECK(p11.coeffs().size() == 2);

    SymFuncM p22 = power_to_m(Partition({2, 2}));
    CHECK(p22.coeff(Partition({4})) == 1);
    CHECK(p22.coeff(Partition({2, 2})) == 2);
    CHECK(p22.coeffs().size() == 2);

    // brute-force multivariate oracle, every lambda of n <= 6
    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            MultiPoly raw = MultiPoly::constant(n, 1);
            for (int part : lambda.parts()) raw = raw.mul(MultiPoly::power_sum(n, part));
            SymFuncM got = power_to_m(lambda);
            for (const Partition& nu : partitions_of(n))
                CHECK(got.coeff(nu) == raw.m_coeff(nu));
        }
}

TEST_CASE("m-basis products") {
    SymFuncM m11 = SymFuncM::monomial(Partition({1, 1}));
    SymFuncM sq = m_product(m11, m11);
    CHECK(sq.coeff(Partition({2, 2})) == 1);
    CHECK(sq.coeff(Partition({2, 1, 1})) == 2);
    CHECK(sq.coeff(Partition({1, 1, 1, 1})) == 6);
    CHECK(sq.coeffs().size() == 3);

    SymFuncM m2 = SymFuncM::monomial(Partition({2}));
    SymFuncM m2sq = m_product(m2, m2);
    CHECK(m2sq.coeff(Partition({4})) == 1);
    CHECK(m2sq.coeff(Partition({2, 2})) == 2);
    CHECK(m2sq.coeffs().size() == 2);

    SymFuncM f = SymFuncM::monomial(Partition({3, 1}));
    CHECK(m_product(f, SymFuncM::one()) == f);
    CHECK(m_product(SymFuncM::one(), f) == f);

    // oracle: every pair of m-monomials with |a| + |b| <= 7
    for (int na = 1; na <= 4; ++na)
        for (int nb = 1; nb <= 7 - na && nb <= na; ++nb)
            for (const Partition& a : partitions_of(na))
                for (const Partition& b : partitions_of(nb)) {
                    const int d = na + nb;
                    MultiPoly raw = MultiPoly::monomial_sym(d, a).mul(MultiPoly::monomial_sym(d, b));
                    SymFuncM got = m_product(SymFuncM::monomial(a), SymFuncM::monomial(b));
                    for (const Partition& nu : partitions_of(d))
                        CHECK(got.coeff(nu) == raw.m_coeff(nu));
                }
}

TEST_CASE("signed doubled-part power sums") {
    SymFuncM one_part = ev_signed_power_sum(Partition({1}));
    CHECK(one_part.coeffs().size() == 1);
    CHECK(one_part.coeff(Partition({1, 1})) == 2);

    SymFuncM two_part = ev_signed_power_sum(Partition({2}));
    CHECK(two_part.coeffs().size() == 1);
    CHECK(two_part.coeff(Partition({2, 2})) == 2);

    CHECK(ev_signed_power_sum(Partition({3, 2, 2})) ==
          doubled_row_monomial_product(Partition({3, 2, 2})));

    // independent multivariate route for small lambda
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            const int d = 2 * n;
            MultiPoly raw = MultiPoly::constant(d, 0);
            for (const auto& [tilde, mult] : ev(lambda)) {
                MultiPoly term = MultiPoly::constant(d, (tilde.length() % 2) ? -mult : mult);
                for (int part : tilde.parts()) term = term.mul(MultiPoly::power_sum(d, part));
                for (const auto& [e, c] : term.terms) {
                    auto [it, inserted] = raw.terms.try_emplace(e, c);
                    if (!inserted) {
                        it->second += c;
                        if (it->second == 0) raw.terms.erase(it);
                    }
                }
            }
            SymFuncM got = ev_signed_power_sum(lambda);
            for (const Partition& nu : partitions_of(d))
                CHECK(got.coeff(nu) == raw.m_coeff(nu));
        }

    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            CHECK(ev_power_identity_holds(lambda));
}

TEST_CASE("Jacobi-Trudi expansions") {
    auto single = jacobi_trudi_h(Partition({6}));
    REQUIRE(single.size() == 1);
    CHECK(single.at(Partition({6})) == 1);

    auto col = jacobi_trudi_h(Partition({1, 1}));
    REQUIRE(col.size() == 2);
    CHECK(col.at(Partition({1, 1})) == 1);
    CHECK(col.at(Partition({2})) == -1);

    auto sq = jacobi_trudi_h(Partition({2, 2}));
    REQUIRE(sq.size() == 2);
    CHECK(sq.at(Partition({2, 2})) == 1);
    CHECK(sq.at(Partition({3, 1})) == -1);
}

TEST_CASE("inner products against Schur functions") {
    CHECK(inner_m_schur(SymFuncM::monomial(Partition({1, 1})), Partition({1, 1})) == 1);
    // the Riordan interpretation attaches to the n-row shape (2^n); its
    // conjugate (n,n) admits a single vertical-strip chain
    CHECK(inner_m_schur(m11_power(4), Partition({2, 2, 2, 2})) == 3);
    CHECK(inner_m_schur(m11_power(4), Partition({4, 4})) == 1);
    CHECK(inner_m_schur(m11_power(5), Partition({2, 2, 2, 2, 2})) == 6);
    CHECK_THROWS_AS(inner_m_schur(m11_power(2), Partition({3})), std::invalid_argument);

    // <p_lambda, s_mu> recovers the character: independent of the recursion
    CharEngine engine;
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(inner_m_schur(power_to_m(lambda), mu) == engine.chi(mu, lambda));

    for (int n = 1; n <= 6; ++n)
        CHECK(inner_m_schur(m11_power(n), Partition(std::vector<int>(n, 2))) == riordan_count(n));
}

TEST_CASE("doubled-row inner products against every three-row shape") {
    // <prod_i m_{(l_i,l_i)}, s_mu> equals the 2^{-r}-scaled signed character
    // sum over Ev(lambda), for every mu of 2n with at most three rows
    CharEngine engine;
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            SymFuncM prod = SymFuncM::one();
            for (int part : lambda.parts())
                prod = m_product(prod, SymFuncM::monomial(Partition({part, part})));
            BigInt scale = BigInt(1) << lambda.length();
            for (const Partition& mu : partitions_of_max_length(2 * n, 3)) {
                BigInt signed_sum = 0;
                for (const auto& [tilde, mult] : ev(lambda)) {
                    BigInt term = mult * engine.chi(mu, tilde);
                    signed_sum += (tilde.length() % 2) ? -term : term;
                }
                REQUIRE(signed_sum % scale == 0);
                CHECK(inner_m_schur(prod, mu) == BigInt(signed_sum / scale));
            }
        }
}

TEST_CASE("summed inner products over the three-row even set") {
    // row sums over R_3(2n): the matching-parity ballot count for single
    // boxes, the central trinomial for repeated parts c > 1
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (const Partition& mu : r_even_rows(3, 2 * n))
            total += inner_m_schur(m11_power(n), mu);
        CHECK(total == matching_parity_count(n));
    }
    for (int c = 2; c <= 3; ++c)
        for (int d = 1; d <= 4; ++d) {
            SymFuncM f = SymFuncM::one();
            for (int i = 0; i < d; ++i)
                f = m_product(f, SymFuncM::monomial(Partition({c, c})));
            BigInt total = 0;
            for (const Partition& mu : r_even_rows(3, 2 * c * d))
                total += inner_m_schur(f, mu);
            CHECK(total == central_trinomial(d));
        }
}

TEST_CASE("vertical strip chains") {
    CHECK(count_vertical_strip_chains(1, [](const Partition& p) {
              return p == Partition({1, 1});
          }) == 1);
    CHECK(count_vertical_strip_chains(5, [](const Partition& p) {
              return p == Partition({2, 2, 2, 2, 2});
          }) == 6);
    auto r3 = r_even_rows(3, 8);
    CHECK(count_vertical_strip_chains(4, [&](const Partition& p) {
              return std::find(r3.begin(), r3.end(), p) != r3.end();
          }) == 3);

    // chain counts are the same inner products computed by the determinant
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions_of_max_length(2 * n, 4)) {
            if (mu.size() != 2 * n) continue;
            BigInt chains = count_vertical_strip_chains(
                n, [&](const Partition& p) { return p == mu; });
            CHECK(chains == inner_m_schur(m11_power(n), mu));
        }
}
