#include "evchar/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "evchar/ev_sets.hpp"

namespace evchar {

SymFuncM SymFuncM::one() {
    SymFuncM f(0);
    f.coeffs_[Partition()] = 1;
    return f;
}

SymFuncM SymFuncM::monomial(const Partition& lambda) {
    SymFuncM f(lambda.size());
    f.coeffs_[lambda] = 1;
    return f;
}

BigInt SymFuncM::coeff(const Partition& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void SymFuncM::add_term(const Partition& key, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SymFuncM& SymFuncM::add_scaled(const SymFuncM& other, const BigInt& scale) {
    if (other.is_zero() || scale == 0) return *this;
    if (is_zero())
        degree_ = other.degree_;
    else if (degree_ != other.degree_)
        throw std::invalid_argument("add_scaled: degree mismatch");
    for (const auto& [key, c] : other.coeffs_) add_term(key, c * scale);
    return *this;
}

namespace {

struct Group {
    int value;
    int mult;
};

std::vector<Group> group_parts(const Partition& p) {
    std::vector<Group> groups;
    const auto& parts = p.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        groups.push_back({parts[i], static_cast<int>(j - i)});
        i = j;
    }
    return groups;
}

// Candidate result partitions of m_base * m_small: distribute each distinct
// part value of `small` over the distinct part values of `base` (overlap) or
// onto fresh coordinates, and record the merged multiset. Distinct
// distributions may collide on the same partition, hence the set.
std::set<Partition> product_candidates(const Partition& base, const Partition& small) {
    std::vector<Group> base_groups = group_parts(base);
    std::vector<Group> small_groups = group_parts(small);
    std::set<Partition> out;
    std::vector<int> placed_on(base_groups.size(), 0);
    std::vector<int> acc;

    std::function<void(size_t)> rec = [&](size_t gi) {
        if (gi == small_groups.size()) {
            std::vector<int> full = acc;
            for (size_t g = 0; g < base_groups.size(); ++g)
                for (int c = placed_on[g]; c < base_groups[g].mult; ++c)
                    full.push_back(base_groups[g].value);
            out.insert(Partition::from_unsorted(full));
            return;
        }
        const auto [v, t] = small_groups[gi];
        const size_t n_groups = base_groups.size();
        std::vector<int> counts(n_groups, 0);
        auto assign = [&](auto&& self, size_t g, int left) -> void {
            if (g == n_groups) {
                size_t mark = acc.size();
                for (size_t gg = 0; gg < n_groups; ++gg)
                    for (int c = 0; c < counts[gg]; ++c)
                        acc.push_back(base_groups[gg].value + v);
                for (int c = 0; c < left; ++c) acc.push_back(v);
                for (size_t gg = 0; gg < n_groups; ++gg) placed_on[gg] += counts[gg];
                rec(gi + 1);
                for (size_t gg = 0; gg < n_groups; ++gg) placed_on[gg] -= counts[gg];
                acc.resize(mark);
                return;
            }
            int room = base_groups[g].mult - placed_on[g];
            for (int c = 0; c <= std::min(room, left); ++c) {
                counts[g] = c;
                self(self, g + 1, left - c);
            }
            counts[g] = 0;
        };
        assign(assign, 0, t);
    };
    rec(0);
    return out;
}

// Structure constant of m_lam * m_mu on m_nu: the number of vectors b over
// the coordinates of nu whose nonzero entries form the multiset mu and whose
// remainder nu - b has nonzero entries forming lam.
BigInt count_pairs(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int k = nu.length();
    std::vector<Group> mu_groups = group_parts(mu);
    std::vector<bool> used(static_cast<size_t>(k), false);
    std::vector<int> remainder(nu.parts().begin(), nu.parts().end());

    BigInt count = 0;
    auto remainder_is_lam = [&]() {
        std::vector<int> rem;
        for (int v : remainder)
            if (v > 0) rem.push_back(v);
        std::sort(rem.begin(), rem.end(), std::greater<int>());
        return rem == lam.parts();
    };

    std::function<void(size_t)> place_group = [&](size_t gi) {
        if (gi == mu_groups.size()) {
            if (remainder_is_lam()) ++count;
            return;
        }
        const auto [v, t] = mu_groups[gi];
        auto choose = [&](auto&& self, int start, int left) -> void {
            if (left == 0) {
                place_group(gi + 1);
                return;
            }
            for (int i = start; i <= k - left; ++i) {
                size_t ui = static_cast<size_t>(i);
                if (used[ui] || nu.parts()[ui] < v) continue;
                used[ui] = true;
                remainder[ui] -= v;
                self(self, i + 1, left - 1);
                remainder[ui] += v;
                used[ui] = false;
            }
        };
        choose(choose, 0, t);
    };
    place_group(0);
    return count;
}

void accumulate_pair(const Partition& lam, const Partition& mu, const BigInt& c,
                     SymFuncM& out) {
    if (lam.empty()) {
        out.add_term(mu, c);
        return;
    }
    if (mu.empty()) {
        out.add_term(lam, c);
        return;
    }
    const Partition& base = (lam.length() >= mu.length()) ? lam : mu;
    const Partition& small = (lam.length() >= mu.length()) ? mu : lam;
    for (const Partition& nu : product_candidates(base, small))
        out.add_term(nu, c * count_pairs(lam, mu, nu));
}

}  // namespace

SymFuncM m_product(const SymFuncM& a, const SymFuncM& b) {
    SymFuncM out(a.degree() + b.degree());
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [lam, ca] : a.coeffs())
        for (const auto& [mu, cb] : b.coeffs()) accumulate_pair(lam, mu, ca * cb, out);
    return out;
}

SymFuncM power_to_m(const Partition& lambda) {
    SymFuncM f = SymFuncM::one();
    for (int part : lambda.parts())
        f = m_product(f, SymFuncM::monomial(Partition({part})));
    return f;
}

SymFuncM ev_signed_power_sum(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("ev_signed_power_sum: empty partition");
    SymFuncM total(2 * lambda.size());
    for (const auto& [tilde, mult] : ev(lambda)) {
        BigInt w = (tilde.length() % 2) ? -mult : mult;
        total.add_scaled(power_to_m(tilde), w);
    }
    return total;
}

SymFuncM doubled_row_monomial_product(const Partition& lambda) {
    SymFuncM f = SymFuncM::one();
    for (int part : lambda.parts())
        f = m_product(f, SymFuncM::monomial(Partition({part, part})));
    BigInt scale = BigInt(1) << lambda.length();
    SymFuncM out(f.degree());
    out.add_scaled(f, scale);
    return out;
}

bool ev_power_identity_holds(const Partition& lambda) {
    return ev_signed_power_sum(lambda) == doubled_row_monomial_product(lambda);
}

std::map<Partition, BigInt, RevLexLess> jacobi_trudi_h(const Partition& mu) {
    std::map<Partition, BigInt, RevLexLess> out;
    const int m = mu.length();
    if (m == 0) {
        out[Partition()] = 1;
        return out;
    }
    // Expand det(h_{mu_i - i + j}) over permutations; a negative subscript
    // kills its term and h_0 contributes nothing to the product.
    std::vector<bool> used(static_cast<size_t>(m), false);
    std::vector<int> subscripts;
    auto rec = [&](auto&& self, int row, int parity) -> void {
        if (row == m) {
            Partition nu = Partition::from_unsorted(subscripts);
            BigInt& slot = out[nu];
            slot += (parity % 2) ? -1 : 1;
            if (slot == 0) out.erase(nu);
            return;
        }
        for (int col = 0; col < m; ++col) {
            if (used[static_cast<size_t>(col)]) continue;
            int s = mu.part(row) - row + col;
            if (s < 0) continue;
            int inv = 0;  // inversions contributed by picking this column now
            for (int c2 = col + 1; c2 < m; ++c2)
                if (used[static_cast<size_t>(c2)]) ++inv;
            used[static_cast<size_t>(col)] = true;
            if (s > 0) subscripts.push_back(s);
            self(self, row + 1, parity + inv);
            if (s > 0) subscripts.pop_back();
            used[static_cast<size_t>(col)] = false;
        }
    };
    rec(rec, 0, 0);
    return out;
}

BigInt inner_m_schur(const SymFuncM& f, const Partition& mu) {
    if (f.degree() != mu.size())
        throw std::invalid_argument("inner_m_schur: degree " + std::to_string(f.degree()) +
                                    " != |mu| = " + std::to_string(mu.size()));
    BigInt total = 0;
    for (const auto& [nu, c] : jacobi_trudi_h(mu)) total += c * f.coeff(nu);
    return total;
}

BigInt count_vertical_strip_chains(int n, const std::function<bool(const Partition&)>& final_filter) {
    if (n < 0) throw std::invalid_argument("count_vertical_strip_chains: n must be >= 0");
    std::map<Partition, BigInt> level;
    level[Partition()] = 1;
    for (int step = 0; step < n; ++step) {
        std::map<Partition, BigInt> next;
        for (const auto& [shape, cnt] : level) {
            const int len = shape.length();
            for (int a = 0; a <= len; ++a) {
                for (int b = a + 1; b <= len + 1; ++b) {
                    std::vector<int> v(shape.parts().begin(), shape.parts().end());
                    if (static_cast<int>(v.size()) <= b) v.resize(static_cast<size_t>(b) + 1, 0);
                    v[static_cast<size_t>(a)] += 1;
                    v[static_cast<size_t>(b)] += 1;
                    bool ok = true;
                    for (size_t i = 0; i + 1 < v.size(); ++i)
                        if (v[i] < v[i + 1]) { ok = false; break; }
                    if (!ok) continue;
                    while (!v.empty() && v.back() == 0) v.pop_back();
                    next[Partition(std::move(v))] += cnt;
                }
            }
        }
        level = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [shape, cnt] : level)
        if (final_filter(shape)) total += cnt;
    return total;
}

}  // namespace evchar
