#include "evchar/laurent.hpp"

#include <stdexcept>

#include "evchar/ev_sets.hpp"

namespace evchar {

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
    if (arity < 1 || arity > 3) throw std::invalid_argument("LaurentPoly: arity must be 1..3");
}

LaurentPoly LaurentPoly::constant(int arity, const BigInt& c) {
    LaurentPoly p(arity);
    p.add_term({0, 0, 0}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, Exponents e, const BigInt& c) {
    LaurentPoly p(arity);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(Exponents e, const BigInt& c) {
    for (int i = arity_; i < 3; ++i)
        if (e[static_cast<size_t>(i)] != 0)
            throw std::invalid_argument("LaurentPoly: exponent beyond arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coeff(Exponents e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("LaurentPoly: arity mismatch");
    LaurentPoly out(arity_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly result = constant(arity_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

BigInt chi_via_ct(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("chi_via_ct: |mu| = " + std::to_string(mu.size()) +
                                    " but |lambda| = " + std::to_string(lambda.size()));
    if (mu.length() > 3)
        throw std::invalid_argument("chi_via_ct: at most 3 rows supported, got " +
                                    std::to_string(mu.length()));
    if (mu.empty()) return 1;

    const int m = mu.length();
    // Clear denominators: multiply by prod x_i^{m-i}, turning the Vandermonde
    // of 1 - x_j/x_i into prod_{i<j}(x_i - x_j) and the target constant term
    // into the coefficient of prod x_i^{mu_i + m - i}.
    LaurentPoly poly = LaurentPoly::constant(m, 1);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            LaurentPoly factor(m);
            LaurentPoly::Exponents ei{0, 0, 0}, ej{0, 0, 0};
            ei[static_cast<size_t>(i)] = 1;
            ej[static_cast<size_t>(j)] = 1;
            factor.add_term(ei, 1);
            factor.add_term(ej, -1);
            poly = poly * factor;
        }
    }
    for (int part : lambda.parts()) {
        LaurentPoly power_sum(m);
        for (int i = 0; i < m; ++i) {
            LaurentPoly::Exponents e{0, 0, 0};
            e[static_cast<size_t>(i)] = part;
            power_sum.add_term(e, 1);
        }
        poly = poly * power_sum;
    }
    LaurentPoly::Exponents target{0, 0, 0};
    for (int i = 0; i < m; ++i) target[static_cast<size_t>(i)] = mu.part(i) + (m - 1 - i);
    return poly.coeff(target);
}

BigInt trinomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("trinomial: n must be >= 0");
    if (k < 0 || k > 2 * n) return 0;
    LaurentPoly base(1);
    base.add_term({0, 0, 0}, 1);
    base.add_term({1, 0, 0}, 1);
    base.add_term({2, 0, 0}, 1);
    return base.pow(n).coeff({k, 0, 0});
}

BigInt central_trinomial(int d) { return trinomial(d, d); }

BigInt riordan_via_ct(int d) {
    if (d < 0) throw std::invalid_argument("riordan_via_ct: d must be >= 0");
    LaurentPoly kernel(1);
    kernel.add_term({-1, 0, 0}, 1);
    kernel.add_term({0, 0, 0}, 1);
    kernel.add_term({1, 0, 0}, 1);
    LaurentPoly one_minus_x(1);
    one_minus_x.add_term({0, 0, 0}, 1);
    one_minus_x.add_term({1, 0, 0}, -1);
    return (one_minus_x * kernel.pow(d)).ct();
}

BigInt a_single_column(int c, int d, SumMode mode, CharEngine& engine) {
    if (c < 1 || d < 1) throw std::invalid_argument("a_single_column: c, d must be >= 1");
    const int n = c * d;
    switch (mode) {
        case SumMode::kChars: {
            const Partition col({n, n});
            BigInt total = 0;
            for (const auto& [tilde, mult] : ev(Partition(std::vector<int>(d, c))))
                total += mult * engine.chi(col, tilde);
            return total;
        }
        case SumMode::kClosed: {
            LaurentPoly kernel(1);
            kernel.add_term({-c, 0, 0}, 1);
            kernel.add_term({0, 0, 0}, 1);
            kernel.add_term({c, 0, 0}, 1);
            LaurentPoly one_minus_x(1);
            one_minus_x.add_term({0, 0, 0}, 1);
            one_minus_x.add_term({1, 0, 0}, -1);
            return (BigInt(1) << d) * (one_minus_x * kernel.pow(d)).ct();
        }
        case SumMode::kCtIntermediate:
            throw std::invalid_argument("a_single_column: no intermediate mode");
    }
    throw std::logic_error("a_single_column: bad mode");
}

namespace {

LaurentPoly b_kernel(int c, int d) {
    LaurentPoly kernel(3);
    kernel.add_term({c, c, 0}, 1);
    kernel.add_term({0, c, c}, 1);
    kernel.add_term({c, 0, c}, 1);
    return kernel.pow(d);
}

LaurentPoly b_denominator_sum(int n) {
    // sum over mu1 >= mu2 >= mu3 >= 0, mu1+mu2+mu3 = n of
    //   (1 - x2/x1)(1 - x3/x1)(1 - x3/x2) / (x1^{2mu1} x2^{2mu2} x3^{2mu3})
    LaurentPoly numer = LaurentPoly::constant(3, 1);
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& [hi, lo] : pairs) {
        LaurentPoly factor(3);
        factor.add_term({0, 0, 0}, 1);
        LaurentPoly::Exponents e{0, 0, 0};
        e[static_cast<size_t>(hi)] = -1;
        e[static_cast<size_t>(lo)] = 1;
        factor.add_term(e, -1);
        numer = numer * factor;
    }
    LaurentPoly total(3);
    for (int mu1 = 0; mu1 <= n; ++mu1)
        for (int mu2 = 0; mu2 <= mu1; ++mu2) {
            int mu3 = n - mu1 - mu2;
            if (mu3 < 0 || mu3 > mu2) continue;
            for (const auto& [e, coeff] : numer.terms())
                total.add_term({e[0] - 2 * mu1, e[1] - 2 * mu2, e[2] - 2 * mu3}, coeff);
        }
    return total;
}

}  // namespace

BigInt b_three_row_sum(int c, int d, SumMode mode, CharEngine& engine) {
    if (c < 1 || d < 1) throw std::invalid_argument("b_three_row_sum: c, d must be >= 1");
    const int n = c * d;
    switch (mode) {
        case SumMode::kChars: {
            const std::vector<Partition> columns = r_even_rows(3, 2 * n);
            BigInt total = 0;
            for (const auto& [tilde, mult] : ev(Partition(std::vector<int>(d, c)))) {
                BigInt column_sum = 0;
                for (const Partition& mu : columns) column_sum += engine.chi(mu, tilde);
                BigInt contribution = mult * column_sum;
                total += (tilde.length() % 2) ? -contribution : contribution;
            }
            return total;
        }
        case SumMode::kClosed:
            if (c == 1)
                throw std::invalid_argument(
                    "b_three_row_sum: closed form needs c > 1; for c = 1 the value is "
                    "2^d * R(d), see riordan_count / riordan_via_ct");
            return (BigInt(1) << d) * central_trinomial(d);
        case SumMode::kCtIntermediate:
            return (BigInt(1) << d) * (b_kernel(c, d) * b_denominator_sum(n)).ct();
    }
    throw std::logic_error("b_three_row_sum: bad mode");
}

}  // namespace evchar
