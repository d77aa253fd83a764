#pragma once

#include <functional>
#include <map>
#include <vector>

#include "evchar/bigint.hpp"
#include "evchar/partition.hpp"

namespace evchar {

/// Degree-homogeneous symmetric function in the monomial basis: a map from
/// partitions of `degree` to exact integer coefficients, zeros absent.
class SymFuncM {
public:
    using CoeffMap = std::map<Partition, BigInt, RevLexLess>;

    SymFuncM() = default;  // the zero function of degree 0
    explicit SymFuncM(int degree) : degree_(degree) {}

    /// The constant 1 = m of the empty partition.
    static SymFuncM one();

    /// m_lambda.
    static SymFuncM monomial(const Partition& lambda);

    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    BigInt coeff(const Partition& key) const;
    void add_term(const Partition& key, const BigInt& c);
    SymFuncM& add_scaled(const SymFuncM& other, const BigInt& scale);

    bool operator==(const SymFuncM& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

private:
    int degree_ = 0;
    CoeffMap coeffs_;
};

/// Exact product in the m-basis; structure constants are computed on the fly
/// by merging exponent patterns.
SymFuncM m_product(const SymFuncM& a, const SymFuncM& b);

/// p_lambda expanded in the m-basis.
SymFuncM power_to_m(const Partition& lambda);

/// sum over Ev(lambda) of multiplicity * (-1)^length * p_tilde, in the
/// m-basis. Degree 2|lambda|.
SymFuncM ev_signed_power_sum(const Partition& lambda);

/// 2^{l(lambda)} * prod_i m_{(lambda_i, lambda_i)}.
SymFuncM doubled_row_monomial_product(const Partition& lambda);

/// True iff ev_signed_power_sum(lambda) == doubled_row_monomial_product(lambda)
/// coefficientwise.
bool ev_power_identity_holds(const Partition& lambda);

/// s_mu written as an integer combination of products h_nu via the
/// Jacobi-Trudi determinant; nu is the sorted multiset of subscripts with
/// h_0 = 1 dropped and any negative subscript killing its term.
std::map<Partition, BigInt, RevLexLess> jacobi_trudi_h(const Partition& mu);

/// Hall inner product <f, s_mu> using <m_lambda, h_nu> = delta, so the value
/// is independent of any character computation. Throws on degree mismatch.
BigInt inner_m_schur(const SymFuncM& f, const Partition& mu);

/// Number of chains adding two boxes in distinct rows n times, from the
/// empty shape to any shape accepted by final_filter (dual Pieri steps).
BigInt count_vertical_strip_chains(int n, const std::function<bool(const Partition&)>& final_filter);

}  // namespace evchar
