#include "youngp/pprime.hpp"

#include <map>
#include <stdexcept>

namespace youngp {

bool macdonald_test(const partition& lam, long p) {
    if (!is_prime(p)) throw std::invalid_argument("macdonald_test: p must be prime");
    partition cur = lam;
    long n = cur.n();
    while (n > 0) {
        const long k = top_exponent(n, p);
        const long pk = ipow(p, k);
        const long a = n / pk;
        partition stripped = core_of(cur, static_cast<int>(pk));
        if (stripped.n() != n - a * pk) return false;  // weight is not a
        cur = std::move(stripped);
        n -= a * pk;
    }
    return true;
}

long core_tower::level_sum(size_t v) const {
    long s = 0;
    if (v < rows.size())
        for (const partition& mu : rows[v]) s += mu.n();
    return s;
}

long core_tower::total() const {
    long n = 0;
    for (size_t v = 0; v < rows.size(); ++v) n += level_sum(v) * ipow(prime, static_cast<long>(v));
    return n;
}

core_tower compute_core_tower(const partition& lam, long p) {
    if (!is_prime(p)) throw std::invalid_argument("compute_core_tower: p must be prime");
    core_tower t;
    t.prime = p;
    /* Depth large enough that every entry at the last level is empty:
     * sizes shrink by a factor p per level. */
    size_t depth = 1;
    for (long m = lam.n(); m > 0; m /= p) ++depth;
    t.rows.assign(depth, {});
    struct frame {
        partition lam;
        size_t level;
    };
    // breadth-first fill keeps row v in quotient-component order
    std::vector<frame> cur{{lam, 0}};
    for (size_t v = 0; v < depth; ++v) {
        std::vector<frame> next;
        for (frame& f : cur) {
            if (v + 1 < depth) {
                core_quotient cq = core_and_quotient_mod0(f.lam, static_cast<int>(p));
                t.rows[v].push_back(cq.core);
                for (long j = 0; j < p; ++j)
                    next.push_back({cq.quotient[static_cast<size_t>(j)], v + 1});
            } else {
                if (!f.lam.empty())
                    throw std::logic_error("compute_core_tower: depth too small");
                t.rows[v].push_back(f.lam);
            }
        }
        cur = std::move(next);
    }
    // trim trailing all-empty rows beyond row 0
    while (t.rows.size() > 1) {
        bool all_empty = true;
        for (const partition& mu : t.rows.back())
            if (!mu.empty()) all_empty = false;
        if (!all_empty) break;
        t.rows.pop_back();
    }
    return t;
}

bool tower_test(const core_tower& t) {
    const long n = t.total();
    if (n == 0) return true;
    padic_expansion d = padic_digits(n, t.prime);
    std::map<long, long> digit;
    for (auto [a, e] : d.digits) digit[e] = a;
    for (size_t v = 0; v < t.rows.size(); ++v) {
        long want = digit.count(static_cast<long>(v)) ? digit[static_cast<long>(v)] : 0;
        if (t.level_sum(v) != want) return false;
    }
    return true;
}

partition tower_to_partition(const core_tower& t) {
    const long p = t.prime;
    if (t.rows.empty()) return {};
    std::vector<partition> level = t.rows.back();
    for (size_t v = t.rows.size() - 1; v-- > 0;) {
        const std::vector<partition>& cores = t.rows[v];
        std::vector<partition> merged;
        merged.reserve(cores.size());
        for (size_t i = 0; i < cores.size(); ++i) {
            core_quotient cq;
            cq.core = cores[i];
            for (long j = 0; j < p; ++j)
                cq.quotient.push_back(level.at(i * static_cast<size_t>(p) + static_cast<size_t>(j)));
            const long r = cq.core.rows();
            cq.charge = ((r + p - 1) / p) * p;
            merged.push_back(from_core_quotient(cq, static_cast<int>(p)));
        }
        level = std::move(merged);
    }
    return level.at(0);
}

namespace {

/* Compositions of a into `slots` nonnegative parts, lexicographic. */
void for_each_composition(long a, long slots, std::vector<long>& acc,
                          const std::function<void(const std::vector<long>&)>& fn) {
    if (slots == 1) {
        acc.push_back(a);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (long b = 0; b <= a; ++b) {
        acc.push_back(b);
        for_each_composition(a - b, slots - 1, acc, fn);
        acc.pop_back();
    }
}

/* All vectors (m_0,...,m_{p-1}) whose digitwise sums reproduce the
 * p-adic digits of rest; no carries are possible by construction. */
std::vector<std::vector<long>> digit_splits(long rest, long p) {
    std::vector<std::vector<long>> out{std::vector<long>(static_cast<size_t>(p), 0)};
    long scale = 1;
    for (long r = rest; r > 0; r /= p, scale *= p) {
        const long digit = r % p;
        if (digit == 0) continue;
        std::vector<std::vector<long>> grown;
        std::vector<long> acc;
        for_each_composition(digit, p, acc, [&](const std::vector<long>& comp) {
            for (const std::vector<long>& base : out) {
                std::vector<long> ms = base;
                for (long t = 0; t < p; ++t)
                    ms[static_cast<size_t>(t)] += comp[static_cast<size_t>(t)] * scale;
                grown.push_back(std::move(ms));
            }
        });
        out = std::move(grown);
    }
    return out;
}

struct pprime_enumerator {
    long p;
    std::map<long, std::vector<partition>> memo;

    const std::vector<partition>& all(long n) {
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
        std::vector<partition> out;
        if (n == 0) {
            out.push_back(partition{});
        } else {
            const long a0 = n % p;
            const long rest = n / p;
            const std::vector<std::vector<long>> splits = digit_splits(rest, p);
            const std::vector<partition> cores = partitions_of(static_cast<int>(a0));
            for (const partition& core : cores) {
                for (const std::vector<long>& ms : splits) {
                    std::vector<const std::vector<partition>*> pools;
                    pools.reserve(static_cast<size_t>(p));
                    for (long t = 0; t < p; ++t) pools.push_back(&all(ms[static_cast<size_t>(t)]));
                    std::vector<size_t> idx(static_cast<size_t>(p), 0);
                    for (;;) {
                        core_quotient cq;
                        cq.core = core;
                        for (long t = 0; t < p; ++t)
                            cq.quotient.push_back((*pools[static_cast<size_t>(t)])[idx[static_cast<size_t>(t)]]);
                        const long r = core.rows();
                        cq.charge = ((r + p - 1) / p) * p;
                        out.push_back(from_core_quotient(cq, static_cast<int>(p)));
                        long t = p - 1;
                        while (t >= 0 && ++idx[static_cast<size_t>(t)] == pools[static_cast<size_t>(t)]->size()) {
                            idx[static_cast<size_t>(t)] = 0;
                            --t;
                        }
                        if (t < 0) break;
                    }
                }
            }
        }
        return memo.emplace(n, std::move(out)).first->second;
    }
};

}  // namespace

void enumerate_pprime(long n, long p, const std::function<void(const partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("enumerate_pprime: n must be >= 0");
    if (!is_prime(p)) throw std::invalid_argument("enumerate_pprime: p must be prime");
    pprime_enumerator en{p, {}};
    for (const partition& lam : en.all(n)) fn(lam);
}

std::vector<partition> pprime_partitions(long n, long p) {
    std::vector<partition> out;
    enumerate_pprime(n, p, [&](const partition& lam) { out.push_back(lam); });
    return out;
}

long count_pprime(long n, long p) {
    if (n < 0) throw std::invalid_argument("count_pprime: n must be >= 0");
    if (!is_prime(p)) throw std::invalid_argument("count_pprime: p must be prime");
    std::map<long, long> memo;
    std::function<long(long)> count = [&](long m) -> long {
        if (m == 0) return 1;
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
        long total = 0;
        const long a0 = m % p;
        for (const std::vector<long>& ms : digit_splits(m / p, p)) {
            long prod = 1;
            for (long t = 0; t < p && prod != 0; ++t) prod *= count(ms[static_cast<size_t>(t)]);
            total += prod;
        }
        total *= partition_count(static_cast<int>(a0));
        memo[m] = total;
        return total;
    };
    return count(n);
}

}  // namespace youngp
