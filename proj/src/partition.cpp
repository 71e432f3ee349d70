#include "youngp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace youngp {

partition::partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && parts[i - 1] < parts[i])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
}

long partition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

partition conjugate(const partition& lam) {
    if (lam.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(lam.parts[0]), 0);
    for (int part : lam.parts)
        for (int j = 0; j < part; ++j) cols[static_cast<size_t>(j)]++;
    return partition(std::move(cols));
}

std::vector<node_pos> removable_nodes(const partition& lam) {
    std::vector<node_pos> out;
    int r = lam.rows();
    for (int i = 1; i <= r; ++i)
        if (lam.row(i) > lam.row(i + 1)) out.push_back({i, lam.row(i)});
    return out;
}

bool is_removable(const partition& lam, node_pos pos) {
    return pos.row >= 1 && pos.row <= lam.rows() && pos.col == lam.row(pos.row) &&
           lam.row(pos.row) > lam.row(pos.row + 1);
}

partition remove_node(const partition& lam, node_pos pos) {
    if (!is_removable(lam, pos))
        throw std::invalid_argument("remove_node: (" + std::to_string(pos.row) + "," +
                                    std::to_string(pos.col) + ") is not a removable node of " +
                                    to_string(lam));
    std::vector<int> parts = lam.parts;
    parts[static_cast<size_t>(pos.row) - 1]--;
    if (parts.back() == 0) parts.pop_back();
    partition out;
    out.parts = std::move(parts);  // still weakly decreasing by construction
    return out;
}

std::vector<int> hook_lengths(const partition& lam) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(lam.n()));
    partition conj = conjugate(lam);
    for (int i = 1; i <= lam.rows(); ++i)
        for (int j = 1; j <= lam.row(i); ++j)
            out.push_back(lam.row(i) - j + conj.row(j) - i + 1);
    return out;
}

long valuation(long m, long p) {
    if (m == 0) throw std::invalid_argument("valuation: m must be nonzero");
    long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long factorial_valuation(long m, long p) {
    long v = 0;
    for (long q = m / p; q > 0; q /= p) v += q;
    return v;
}

long degree_p_valuation(const partition& lam, long p) {
    if (!is_prime(p)) throw std::invalid_argument("degree_p_valuation: p must be prime");
    long v = factorial_valuation(lam.n(), p);
    for (int h : hook_lengths(lam)) v -= valuation(h, p);
    return v;
}

long padic_expansion::value() const {
    long n = 0;
    for (auto [a, e] : digits) n += a * ipow(prime, e);
    return n;
}

padic_expansion padic_digits(long n, long p) {
    if (n < 1) throw std::invalid_argument("padic_digits: n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("padic_digits: p must be prime");
    padic_expansion out;
    out.prime = p;
    for (long e = 0; n > 0; ++e, n /= p)
        if (long a = n % p; a != 0) out.digits.emplace_back(a, e);
    return out;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long top_exponent(long n, long p) {
    if (n < 1 || p < 2) throw std::invalid_argument("top_exponent: need n >= 1, p >= 2");
    long k = 0;
    for (long q = p; q <= n; q *= p) ++k;
    return k;
}

long ipow(long p, long k) {
    long r = 1;
    while (k-- > 0) r *= p;
    return r;
}

std::string to_string(const partition& lam) {
    if (lam.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < lam.parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(lam.parts[i]);
    }
    return s;
}

partition parse_partition(const std::string& text) {
    if (text == "-" || text.empty()) return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("parse_partition: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return partition(std::move(parts));  // validates
}

/* Ascending-composition generator (Kelleher's accelAsc), reversed into
 * weakly decreasing part order before the callback. */
void for_each_partition(int n, const std::function<void(const partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    if (n == 0) {
        fn(partition{});
        return;
    }
    std::vector<int> a(static_cast<size_t>(n) + 1, 0);
    int k = 1;
    a[1] = n;
    std::vector<int> buf;
    while (k != 0) {
        int x = a[static_cast<size_t>(k) - 1] + 1;
        int y = a[static_cast<size_t>(k)] - 1;
        k -= 1;
        while (x <= y) {
            a[static_cast<size_t>(k)] = x;
            y -= x;
            k += 1;
        }
        a[static_cast<size_t>(k)] = x + y;
        buf.assign(a.begin(), a.begin() + k + 1);
        std::reverse(buf.begin(), buf.end());
        partition lam;
        lam.parts = buf;
        fn(lam);
    }
}

std::vector<partition> partitions_of(int n) {
    std::vector<partition> out;
    for_each_partition(n, [&](const partition& lam) { out.push_back(lam); });
    return out;
}

long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long> p(static_cast<size_t>(n) + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m) p[static_cast<size_t>(m)] += p[static_cast<size_t>(m - k)];
    return p[static_cast<size_t>(n)];
}

}  // namespace youngp
