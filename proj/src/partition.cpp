#include "evchar/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace evchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty part in partition text");
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument(std::string("bad character in partition text: '") + ch + "'");
            value = value * 10 + (ch - '0');
            if (value > 1'000'000) throw std::invalid_argument("partition part out of range");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw std::invalid_argument("trailing comma in partition text");
    }
    if (!text.empty() && !std::is_sorted(parts.rbegin(), parts.rend()))
        throw std::invalid_argument("partition parts must be weakly decreasing");
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(static_cast<size_t>(parts_[0]));
        for (int i = 1; i <= parts_[0]; ++i) {
            int count = 0;
            for (int p : parts_)
                if (p >= i) ++count;
            cols[static_cast<size_t>(i - 1)] = count;
        }
    }
    return Partition(std::move(cols));
}

Partition Partition::drop_first() const {
    if (parts_.empty()) throw std::logic_error("drop_first on empty partition");
    return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

void gen_rec(int remaining, int max_part, int slots_left, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (slots_left == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // prune: slots_left parts of size p must be able to cover remaining
        if (static_cast<long>(p) * slots_left < remaining) break;
        cur.push_back(p);
        gen_rec(remaining - p, p, slots_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max_length(n, n);
}

std::vector<Partition> partitions_of_max_length(int n, int max_len) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_rec(n, n, std::min(n, max_len), cur, out);
    if (n == 0) out = {Partition()};
    return out;
}

BigInt centralizer_size(const Partition& lambda) {
    BigInt z = 1;
    const auto& parts = lambda.parts();
    size_t i = 0;
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        long mult = static_cast<long>(j - i);
        for (long t = 1; t <= mult; ++t) z *= parts[i] * t;
        i = j;
    }
    return z;
}

BigInt hook_degree(const Partition& mu) {
    Partition conj = mu.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j)
            hooks *= (mu.part(i) - j) + (conj.part(j) - i) - 1;
    return factorial(mu.size()) / hooks;
}

}  // namespace evchar
