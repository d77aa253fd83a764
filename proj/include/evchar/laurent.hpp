#pragma once

#include <array>
#include <map>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/characters.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Sparse Laurent polynomial in up to three variables: exponent vector
/// (signed) -> exact integer coefficient, zeros never stored.
class LaurentPoly {
public:
    using Exponents = std::array<int, 3>;  // coordinates beyond arity stay 0
    using TermMap = std::map<Exponents, BigInt>;

    explicit LaurentPoly(int arity);

    static LaurentPoly zero(int arity) { return LaurentPoly(arity); }
    static LaurentPoly constant(int arity, const BigInt& c);
    static LaurentPoly monomial(int arity, Exponents e, const BigInt& c);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(Exponents e, const BigInt& c);
    BigInt coeff(Exponents e) const;
    /// Coefficient of the all-zero exponent vector.
    BigInt ct() const { return coeff({0, 0, 0}); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    /// k-th power by repeated squaring, k >= 0.
    LaurentPoly pow(int k) const;

private:
    int arity_;
    TermMap terms_;
};

/// chi^mu_lambda as the constant term of
///   prod_{i<j}(1 - x_j/x_i) * prod_j(sum_i x_i^{lambda_j}) / prod_i x_i^{mu_i},
/// evaluated after clearing denominators by a monomial shift. Independent of
/// the Murnaghan-Nakayama route. Requires l(mu) <= 3 and |mu| = |lambda|.
BigInt chi_via_ct(const Partition& mu, const Partition& lambda);

/// Coefficient of x^k in (1 + x + x^2)^n; 0 outside 0 <= k <= 2n.
BigInt trinomial(int n, int k);
/// T(d) = trinomial(d, d).
BigInt central_trinomial(int d);

/// R(d) = ct[(1 - x)(1/x + 1 + x)^d].
BigInt riordan_via_ct(int d);

enum class SumMode { kChars, kClosed, kCtIntermediate };

/// Column sum over Ev((c^d)) of chi^{(n,n)}, n = c*d: kChars evaluates the
/// characters directly, kClosed evaluates 2^d ct[(1-x)(x^-c + 1 + x^c)^d].
BigInt a_single_column(int c, int d, SumMode mode, CharEngine& engine);

/// Signed double sum over Ev((c^d)) and R_3(2n): kChars by characters;
/// kClosed is 2^d T(d) and requires c > 1 (for c = 1 use the Riordan number
/// route, 2^d R(d)); kCtIntermediate keeps three variables and sums the
/// shifted kernel over all weak 3-part partitions of n.
BigInt b_three_row_sum(int c, int d, SumMode mode, CharEngine& engine);

}  // namespace evchar
