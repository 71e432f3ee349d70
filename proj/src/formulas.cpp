#include "youngp/formulas.hpp"

#include <stdexcept>
#include <vector>

namespace youngp {

long pronic_floor(long x) {
    if (x < 0) throw std::invalid_argument("pronic_floor: x must be >= 0");
    long y = 0;
    while ((y + 1) * (y + 2) <= x) ++y;
    return y;
}

long phi(long a, long L) {
    if (a < 0 || L < 0) throw std::invalid_argument("phi: arguments must be >= 0");
    if (L == 0) return 0;
    std::vector<long> f(static_cast<size_t>(a) + 1);
    for (long s = 0; s <= a; ++s) f[static_cast<size_t>(s)] = pronic_floor(s);
    std::vector<long> prev(static_cast<size_t>(a) + 1, 0);  // phi(b, l-1) over budgets b
    std::vector<long> cur(static_cast<size_t>(a) + 1, 0);
    for (long l = 1; l <= L; ++l) {
        for (long b = 0; b <= a; ++b) {
            long best = 0;
            for (long s = 0; s <= b; ++s) {
                long v = f[static_cast<size_t>(s)] + prev[static_cast<size_t>(b - s)];
                if (v > best) best = v;
            }
            cur[static_cast<size_t>(b)] = best;
        }
        std::swap(prev, cur);
        /* phi(a, l) caps at floor(a/2); once reached, more slots change nothing */
        if (prev[static_cast<size_t>(a)] == a / 2) break;
    }
    return prev[static_cast<size_t>(a)];
}

long br_prime_power(long a, long p, long k) {
    if (!is_prime(p)) throw std::invalid_argument("br_prime_power: p must be prime");
    if (a < 1 || a > p - 1) throw std::invalid_argument("br_prime_power: need 1 <= a <= p-1");
    if (k < 0) throw std::invalid_argument("br_prime_power: need k >= 0");
    if (p == 2) return 1;
    if (k == 0) return pronic_floor(2 * a);
    if (k == 1 && 2 * a > p) return p - 1 + 2 * ((2 * a - (p - 1)) / 6);
    return 2 * a;
}

long br_recursive(long n, long p) {
    if (n < 1) throw std::invalid_argument("br_recursive: n must be >= 1");
    padic_expansion d = padic_digits(n, p);
    long br = br_prime_power(d.digits[0].first, p, d.digits[0].second);
    for (size_t j = 1; j < d.digits.size(); ++j) br += phi(d.digits[j].first, br);
    return br;
}

long br_upper_bound(long n, long p) {
    if (n < 1) throw std::invalid_argument("br_upper_bound: n must be >= 1");
    padic_expansion d = padic_digits(n, p);
    long b = br_prime_power(d.digits[0].first, p, d.digits[0].second);
    for (size_t j = 1; j < d.digits.size(); ++j) b += d.digits[j].first / 2;
    return b;
}

bool epsilon_within_bound(long epsilon, long p) {
    /* epsilon < (p/2) log2 p  <=>  4^epsilon < p^p, compared exactly */
    if (epsilon < 0) return true;
    unsigned __int128 lhs = 1, rhs = 1;
    bool lhs_over = false, rhs_over = false;
    for (long i = 0; i < epsilon; ++i) {
        if (lhs > (unsigned __int128)-1 / 4) {
            lhs_over = true;
            break;
        }
        lhs *= 4;
    }
    for (long i = 0; i < p; ++i) {
        if (rhs > (unsigned __int128)-1 / static_cast<unsigned long>(p)) {
            rhs_over = true;
            break;
        }
        rhs *= static_cast<unsigned long>(p);
    }
    if (rhs_over && !lhs_over) return true;
    if (lhs_over && !rhs_over) return false;
    if (lhs_over && rhs_over)
        throw std::overflow_error("epsilon_within_bound: both sides overflow");
    return lhs < rhs;
}

bound_report bounds(long n, long p) {
    bound_report r;
    r.n = n;
    r.prime = p;
    r.br = br_recursive(n, p);
    r.upper = br_upper_bound(n, p);
    r.epsilon = r.upper - r.br;
    r.within_log_bound = epsilon_within_bound(r.epsilon, p);
    return r;
}

floor_case make_floor_case(long a, long p) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("make_floor_case: p must be an odd prime");
    if (!(2 * a > p && a < p))
        throw std::invalid_argument("make_floor_case: need p/2 < a < p");
    floor_case fc;
    fc.prime = p;
    fc.a = a;
    fc.x = a - (p - 1) / 2;
    fc.q = fc.x / 3;
    fc.delta = fc.x % 3;
    return fc;
}

long max_sqrt_sum(long budget, long slots) {
    if (budget < 0 || slots < 0) throw std::invalid_argument("max_sqrt_sum: arguments must be >= 0");
    auto isqrt = [](long v) {
        long r = 0;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    };
    std::vector<long> best(static_cast<size_t>(budget) + 1, 0);
    for (long s = 0; s < slots; ++s) {
        std::vector<long> next(static_cast<size_t>(budget) + 1, 0);
        for (long b = 0; b <= budget; ++b) {
            long m = 0;
            for (long take = 0; take <= b; ++take) {
                long v = isqrt(take) + best[static_cast<size_t>(b - take)];
                if (v > m) m = v;
            }
            next[static_cast<size_t>(b)] = m;
        }
        best = std::move(next);
    }
    return best[static_cast<size_t>(budget)];
}

long m_doubled(long a, long p) {
    floor_case fc = make_floor_case(a, p);
    const long closed = p - 1 + (2 * fc.x) / 3;
    const long brute = max_sqrt_sum(2 * a, p - 1);
    if (closed != brute)
        throw std::logic_error("m_doubled: closed form " + std::to_string(closed) +
                               " != brute force " + std::to_string(brute));
    return closed;
}

}  // namespace youngp
