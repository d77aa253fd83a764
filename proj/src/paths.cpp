#include "evchar/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace evchar {

bool LatticePath::is_motzkin() const {
    int height = 0;
    for (char s : steps) {
        if (s == 'U') ++height;
        else if (s == 'D') --height;
        else if (s != 'F') return false;
        if (height < 0) return false;
    }
    return height == 0;
}

bool LatticePath::is_riordan() const {
    int height = 0;
    for (char s : steps) {
        if (s == 'U') ++height;
        else if (s == 'D') --height;
        else if (s == 'F') {
            if (height == 0) return false;
        } else return false;
        if (height < 0) return false;
    }
    return height == 0;
}

int LatticePath::up_count() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), 'U'));
}

int LatticePath::flat_count() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), 'F'));
}

bool BallotSequence::is_valid() const {
    int a = 0, b = 0, c = 0;
    for (char v : votes) {
        if (v == 'A') ++a;
        else if (v == 'B') ++b;
        else if (v == 'C') ++c;
        else return false;
        if (a < b || b < c) return false;
    }
    return true;
}

std::array<int, 3> BallotSequence::counts() const {
    std::array<int, 3> n{0, 0, 0};
    for (char v : votes) ++n[static_cast<size_t>(v - 'A')];
    return n;
}

bool BallotSequence::matching_parity() const {
    auto n = counts();
    return (n[0] % 2) == (n[1] % 2) && (n[1] % 2) == (n[2] % 2);
}

bool StandardTableau::is_valid() const {
    std::vector<int> seen;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0 && rows[r][c] <= rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
            seen.push_back(rows[r][c]);
        }
    }
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Partition StandardTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
}

int StandardTableau::size() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

namespace {

void paths_rec(int n, bool riordan, std::string& cur, int height,
               std::vector<LatticePath>& out) {
    int remaining = n - static_cast<int>(cur.size());
    if (remaining == 0) {
        if (height == 0) out.push_back({cur});
        return;
    }
    if (height > remaining) return;  // cannot come back down
    cur.push_back('U');
    paths_rec(n, riordan, cur, height + 1, out);
    cur.back() = 'F';
    if (!riordan || height > 0) paths_rec(n, riordan, cur, height, out);
    if (height > 0) {
        cur.back() = 'D';
        paths_rec(n, riordan, cur, height - 1, out);
    }
    cur.pop_back();
}

}  // namespace

std::vector<LatticePath> motzkin_enumerate(int n) {
    if (n < 0) throw std::invalid_argument("motzkin_enumerate: n must be >= 0");
    std::vector<LatticePath> out;
    std::string cur;
    paths_rec(n, false, cur, 0, out);
    return out;
}

BigInt motzkin_count(int n) { return BigInt(motzkin_enumerate(n).size()); }

std::vector<LatticePath> riordan_enumerate(int n) {
    if (n < 0) throw std::invalid_argument("riordan_enumerate: n must be >= 0");
    std::vector<LatticePath> out;
    std::string cur;
    paths_rec(n, true, cur, 0, out);
    return out;
}

BigInt riordan_count(int n) { return BigInt(riordan_enumerate(n).size()); }

StandardTableau riordan_to_tableau(const LatticePath& path) {
    if (!path.is_riordan())
        throw std::invalid_argument("riordan_to_tableau: not a Riordan path: " + path.steps);
    StandardTableau t;
    if (path.steps.empty()) return t;

    const int n = static_cast<int>(path.steps.size());
    std::vector<int> row1, row2, column_tail;
    std::vector<int> rest_positions;  // non-U positions except the final D
    for (int i = 0; i < n; ++i) {
        if (path.steps[static_cast<size_t>(i)] == 'U') row1.push_back(i + 1);
        else if (i + 1 < n) rest_positions.push_back(i + 1);
    }
    // Entries outside row 1, in order; the smallest is forced into (2,1) and
    // stands for the final D. The rest follow the F/D marks of the remaining
    // positions: F grows the first column, D grows row 2.
    std::vector<int> rest_entries;
    {
        std::vector<bool> in_row1(static_cast<size_t>(n) + 1, false);
        for (int e : row1) in_row1[static_cast<size_t>(e)] = true;
        for (int e = 1; e <= n; ++e)
            if (!in_row1[static_cast<size_t>(e)]) rest_entries.push_back(e);
    }
    row2.push_back(rest_entries[0]);
    for (size_t j = 0; j + 1 < rest_entries.size(); ++j) {
        char mark = path.steps[static_cast<size_t>(rest_positions[j] - 1)];
        if (mark == 'F') column_tail.push_back(rest_entries[j + 1]);
        else row2.push_back(rest_entries[j + 1]);
    }

    t.rows.push_back(std::move(row1));
    t.rows.push_back(std::move(row2));
    for (int e : column_tail) t.rows.push_back({e});
    if (!t.is_valid())
        throw std::logic_error("riordan_to_tableau: produced invalid tableau from " + path.steps);
    return t;
}

LatticePath tableau_to_riordan(const StandardTableau& t) {
    if (t.rows.empty()) return {};
    if (!t.is_valid()) throw std::invalid_argument("tableau_to_riordan: not a standard tableau");
    const Partition shape = t.shape();
    const int k = shape.part(0);
    const int m = shape.length() - 2;
    // shape must be (k,k,1^m)
    bool ok = shape.length() >= 2 && shape.part(1) == k;
    for (int r = 2; r < shape.length(); ++r) ok = ok && shape.part(r) == 1;
    if (!ok || m < 0)
        throw std::invalid_argument("tableau_to_riordan: shape " + shape.str() +
                                    " is not of the form (k,k,1^m)");

    const int n = 2 * k + m;
    std::string steps(static_cast<size_t>(n), '?');
    for (int e : t.rows[0]) steps[static_cast<size_t>(e - 1)] = 'U';
    steps[static_cast<size_t>(n - 1)] = 'D';

    struct Marked {
        int entry;
        char mark;
    };
    std::vector<Marked> rest;
    for (size_t c = 1; c < t.rows[1].size(); ++c) rest.push_back({t.rows[1][c], 'D'});
    for (size_t r = 2; r < t.rows.size(); ++r) rest.push_back({t.rows[r][0], 'F'});
    std::sort(rest.begin(), rest.end(),
              [](const Marked& x, const Marked& y) { return x.entry < y.entry; });

    size_t next = 0;
    for (int i = 0; i < n && next < rest.size(); ++i) {
        if (steps[static_cast<size_t>(i)] == '?') steps[static_cast<size_t>(i)] = rest[next++].mark;
    }
    LatticePath path{steps};
    if (!path.is_riordan())
        throw std::invalid_argument("tableau_to_riordan: tableau does not encode a Riordan path");
    return path;
}

namespace {

void ballot_rec(int n, std::string& cur, int a, int b, int c,
                std::vector<BallotSequence>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.push_back({cur});
        return;
    }
    cur.push_back('A');
    ballot_rec(n, cur, a + 1, b, c, out);
    if (a > b) {
        cur.back() = 'B';
        ballot_rec(n, cur, a, b + 1, c, out);
    }
    if (b > c) {
        cur.back() = 'C';
        ballot_rec(n, cur, a, b, c + 1, out);
    }
    cur.pop_back();
}

}  // namespace

std::vector<BallotSequence> ballot_enumerate(int n) {
    if (n < 0) throw std::invalid_argument("ballot_enumerate: n must be >= 0");
    std::vector<BallotSequence> out;
    std::string cur;
    ballot_rec(n, cur, 0, 0, 0, out);
    return out;
}

BigInt matching_parity_count(int n) {
    BigInt count = 0;
    for (const auto& b : ballot_enumerate(n))
        if (b.matching_parity()) ++count;
    return count;
}

BallotSequence ballot_parity_completion(const BallotSequence& b) {
    if (!b.is_valid()) throw std::invalid_argument("ballot_parity_completion: invalid sequence");
    auto n = b.counts();
    int p0 = n[0] % 2, p1 = n[1] % 2, p2 = n[2] % 2;
    if (p0 == p1 && p1 == p2)
        throw std::invalid_argument("ballot_parity_completion: sequence already has matching parity");
    char odd_one;
    if (p0 != p1 && p0 != p2) odd_one = 'A';
    else if (p1 != p0 && p1 != p2) odd_one = 'B';
    else odd_one = 'C';
    BallotSequence result{b.votes + odd_one};
    if (!result.is_valid() || !result.matching_parity())
        throw std::logic_error("ballot_parity_completion: completion failed for " + b.votes);
    return result;
}

StandardTableau ballot_to_tableau(const BallotSequence& b) {
    if (!b.is_valid()) throw std::invalid_argument("ballot_to_tableau: invalid sequence");
    StandardTableau t;
    t.rows.resize(3);
    for (size_t i = 0; i < b.votes.size(); ++i)
        t.rows[static_cast<size_t>(b.votes[i] - 'A')].push_back(static_cast<int>(i) + 1);
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

BigInt sum_f_matching_parity_shapes(int n) {
    if (n < 1) throw std::invalid_argument("sum_f_matching_parity_shapes: n must be >= 1");
    BigInt total = 0;
    for (const Partition& lam : partitions_of_max_length(n, 3)) {
        // zeros count toward the parity condition, e.g. (2,2,0)
        int p0 = lam.part(0) % 2, p1 = lam.part(1) % 2, p2 = lam.part(2) % 2;
        if (p0 == p1 && p1 == p2) total += hook_degree(lam);
    }
    return total;
}

BigInt sum_f_two_column_hooks(int n) {
    if (n < 1) throw std::invalid_argument("sum_f_two_column_hooks: n must be >= 1");
    BigInt total = 0;
    for (int k = 1; 2 * k <= n; ++k) {
        std::vector<int> parts{k, k};
        for (int i = 0; i < n - 2 * k; ++i) parts.push_back(1);
        total += hook_degree(Partition(std::move(parts)));
    }
    return total;
}

}  // namespace evchar
