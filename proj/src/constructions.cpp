#include "youngp/constructions.hpp"

#include <stdexcept>

#include "youngp/abacus.hpp"
#include "youngp/branching.hpp"
#include "youngp/formulas.hpp"
#include "youngp/pprime.hpp"

namespace youngp {

namespace {

witness checked(partition lam, long claimed, claim_kind kind, long a, long p, long k,
                std::string family) {
    if (!macdonald_test(lam, p))
        throw std::logic_error("witness " + family + ": " + to_string(lam) +
                               " is not a p'-partition for p = " + std::to_string(p));
    const long got = static_cast<long>(restrict_pprime(lam, p).size());
    if (got != claimed)
        throw std::logic_error("witness " + family + ": " + to_string(lam) + " has " +
                               std::to_string(got) + " p'-children, claimed " +
                               std::to_string(claimed));
    return witness{std::move(lam), claimed, kind, a, p, k, std::move(family)};
}

void require_odd_prime(long p, const char* who) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

void push_runner(abacus& a, int j) {
    const std::vector<long> rows = a.runner_rows(j);
    for (long row : rows) a.remove_bead(row, j);
    for (size_t i = 0; i < rows.size(); ++i) a.add_bead(a.floor_row() + static_cast<long>(i), j);
}

void move_bead(abacus& a, long from_row, int from_runner, long to_row, int to_runner) {
    a.remove_bead(from_row, from_runner);
    a.add_bead(to_row, to_runner);
}

void swap_runners(abacus& a, int j0, int j1) {
    const std::vector<long> r0 = a.runner_rows(j0);
    const std::vector<long> r1 = a.runner_rows(j1);
    for (long row : r0) a.remove_bead(row, j0);
    for (long row : r1) a.remove_bead(row, j1);
    for (long row : r0) a.add_bead(row, j1);
    for (long row : r1) a.add_bead(row, j0);
}

/* k = 1, a < p/2.  lambda(j) has 2j children, all of p'-degree; beta(j)
 * has 2j of which one fails, leaving 2j - 1.  Both live on a p-abacus
 * with full rows below -1:
 *   lambda(j): row 0 beads on runners 1,3,...,2j-1; row 1 beads on
 *              2,4,...,2j-2; one deep bead at (a-j+1, 0).
 *   beta(j):   additionally the whole tail (0, 2j), ..., (0, p-1).
 * j = a reproduces the interleaved staircase (p-1,...,p-a,a,...,1). */
abacus k1_small_abacus(long a, long p, long j, bool beta) {
    abacus ab(static_cast<int>(p), -1);
    for (int r = 0; r < p; ++r) ab.add_bead(-1, r);
    for (long c = 1; c <= 2 * j - 1; c += 2) ab.add_bead(0, static_cast<int>(c));
    for (long c = 2; c <= 2 * j - 2; c += 2) ab.add_bead(1, static_cast<int>(c));
    if (beta)
        for (long c = 2 * j; c <= p - 1; ++c) ab.add_bead(0, static_cast<int>(c));
    ab.add_bead(a - j + 1, 0);
    return ab;
}

/* k >= 2.  The A^j abacus (j = 0 is the br-attainer): first gap (1,0)
 * or (1,1), a block of nearly full rows, r = p^{k-1} - a empty rows, and
 * a beads pushed to the bottom. */
abacus kge2_abacus(long a, long p, long k, long j) {
    const long r = ipow(p, k - 1) - a;
    if (r <= 0) throw std::invalid_argument("kge2_abacus: need a < p^(k-1)");
    abacus ab(static_cast<int>(p), 1);
    for (long x = 1; x <= j; ++x)
        for (int c = 0; c < p; ++c)
            if (c != 1) ab.add_bead(x, c);
    for (long x = j + 1; x <= a - 1; ++x)
        for (int c = 1; c < p; ++c) ab.add_bead(x, c);
    ab.add_bead(a, 1);
    for (long x = a + r + 1; x <= a + r + j; ++x) ab.add_bead(x, 1);
    for (long x = a + r + j + 1; x <= 2 * a + r; ++x) ab.add_bead(x, 0);
    return ab;
}

/* k >= 2, targets t <= a.  Dropping the bead in position (a,1) from A^j
 * does not give a - j children of p'-degree (the removable beads on
 * runner 2 gain that status once row a is empty; construction-time
 * validation catches this), so low targets use a direct family instead:
 * t beads of the empty p^k-abacus, on runners p-1, 2p-1, ..., tp-1,
 * slid down a total of a rows.  Sliding a displaced bead left lands the
 * child's p^k-core on the hook (j, 1^(p^k-1-j)) for source runner j,
 * whose degree is coprime to p exactly when j is not divisible by p; the
 * chosen runners survive and their right neighbours (divisible by p) do
 * not, leaving exactly t children of p'-degree. */
abacus kge2_low_abacus(long a, long p, long k, long t) {
    const long e = ipow(p, k);
    abacus ab = abacus::of_partition(partition{}, static_cast<int>(e));
    for (long i = 1; i <= t; ++i) {
        partition drop;
        drop.parts = {static_cast<int>(i == 1 ? a - t + 1 : 1)};
        ab.lift_runner(static_cast<int>(i * p - 1), drop);
    }
    return ab;
}

/* k = 1, p/2 < a < p, x = a - (p-1)/2 = 3q + delta.  The br-attaining
 * abacus: even runners are plain sea up to row -1; runner 1 carries
 * beads at (0,1) and (1+delta,1) over sea <= -3; odd runners 3..2q-1
 * carry (0,.) and (1,.) over sea <= -3; odd runners 2q+1..p-2 carry
 * (0,.) over sea <= -2.  For q = 0 those middle runners do not exist
 * and runner 1 degenerates to a single bead at (delta, 1) over sea
 * <= -2, which is what keeps the weight at a. */
abacus floor_base_abacus(const floor_case& fc) {
    const long p = fc.prime;
    abacus ab(static_cast<int>(p), -3);
    for (long c = 0; c <= p - 1; c += 2)
        for (long row = -3; row <= -1; ++row) ab.add_bead(row, static_cast<int>(c));
    if (fc.q >= 1) {
        ab.add_bead(-3, 1);
        ab.add_bead(0, 1);
        ab.add_bead(1 + fc.delta, 1);
        for (long c = 3; c <= 2 * fc.q - 1; c += 2) {
            ab.add_bead(-3, static_cast<int>(c));
            ab.add_bead(0, static_cast<int>(c));
            ab.add_bead(1, static_cast<int>(c));
        }
        for (long c = 2 * fc.q + 1; c <= p - 2; c += 2) {
            ab.add_bead(-3, static_cast<int>(c));
            ab.add_bead(-2, static_cast<int>(c));
            ab.add_bead(0, static_cast<int>(c));
        }
    } else {
        ab.add_bead(-3, 1);
        ab.add_bead(-2, 1);
        ab.add_bead(fc.delta, 1);
        for (long c = 3; c <= p - 2; c += 2) {
            ab.add_bead(-3, static_cast<int>(c));
            ab.add_bead(-2, static_cast<int>(c));
            ab.add_bead(0, static_cast<int>(c));
        }
    }
    return ab;
}

long floor_deep_row(const floor_case& fc) { return fc.q >= 1 ? 1 + fc.delta : fc.delta; }

/* Even-step family: slide the deep runner-1 bead down i rows and raise
 * the row-0 bead of runner p-2j to row -1 for j = 1..i.  Each raise
 * cancels two removable beads, so the count drops from br by 2i. */
abacus floor_even_abacus(const floor_case& fc, long i) {
    abacus ab = floor_base_abacus(fc);
    const long deep = floor_deep_row(fc);
    move_bead(ab, deep, 1, deep + i, 1);
    for (long j = 1; j <= i; ++j)
        move_bead(ab, 0, static_cast<int>(fc.prime - 2 * j), -1,
                  static_cast<int>(fc.prime - 2 * j));
    return ab;
}

/* Below 2q: keep sliding the deep bead down three rows per step and push
 * one middle runner flat, removing two more removable beads each time. */
abacus floor_even_low_abacus(const floor_case& fc, long i) {
    abacus ab = floor_even_abacus(fc, (fc.prime - 1) / 2);
    const long deep = floor_deep_row(fc) + (fc.prime - 1) / 2;
    move_bead(ab, deep, 1, deep + 3 * i, 1);
    for (long j = 1; j <= i; ++j) push_runner(ab, static_cast<int>(2 * j + 1));
    return ab;
}

/* Odd targets, q >= 1: trade the runner-0/runner-1 head rows, which
 * costs exactly one removable bead, then repeat the even-step moves. */
abacus floor_odd_abacus(const floor_case& fc, long i) {
    abacus ab = floor_base_abacus(fc);
    move_bead(ab, -1, 0, 0, 0);
    move_bead(ab, 0, 1, -1, 1);
    const long deep = floor_deep_row(fc);
    move_bead(ab, deep, 1, deep + i, 1);
    for (long j = 1; j <= i; ++j)
        move_bead(ab, 0, static_cast<int>(fc.prime - 2 * j), -1,
                  static_cast<int>(fc.prime - 2 * j));
    return ab;
}

abacus floor_odd_low_abacus(const floor_case& fc, long i) {
    abacus ab = floor_odd_abacus(fc, (fc.prime - 3) / 2);
    const long deep = floor_deep_row(fc) + (fc.prime - 3) / 2;
    move_bead(ab, deep, 1, deep + 3 * i, 1);
    for (long j = 1; j <= i; ++j) push_runner(ab, static_cast<int>(2 * j + 1));
    return ab;
}

/* Odd targets, q = 0: swap runners 0 and 1 first and step down from the
 * swapped configuration. */
abacus floor_odd_swap_abacus(const floor_case& fc, long i) {
    abacus ab = floor_base_abacus(fc);
    swap_runners(ab, 0, 1);
    move_bead(ab, fc.delta, 0, fc.delta + i, 0);
    for (long j = 1; j <= i; ++j)
        move_bead(ab, 0, static_cast<int>(fc.prime - 2 * j), -1,
                  static_cast<int>(fc.prime - 2 * j));
    return ab;
}

}  // namespace

witness witness_k0(long a, long p, std::optional<long> target) {
    if (!is_prime(p)) throw std::invalid_argument("witness_k0: p must be prime");
    if (a < 1 || a > p - 1) throw std::invalid_argument("witness_k0: need 1 <= a <= p-1");
    const long max = pronic_floor(2 * a);
    const long m = target.value_or(max);
    if (m < 1 || m > max)
        throw std::invalid_argument("witness_k0: target must be in 1.." + std::to_string(max));
    /* staircase with m distinct part sizes, surplus absorbed by the top
     * part; every child is a partition of a-1 < p, hence of p'-degree */
    std::vector<int> parts;
    for (long v = m; v >= 1; --v) parts.push_back(static_cast<int>(v));
    parts[0] += static_cast<int>(a - m * (m + 1) / 2);
    return checked(partition(std::move(parts)), m,
                   m == max ? claim_kind::br_attainer : claim_kind::en_attainer, a, p, 0,
                   "staircase(" + std::to_string(m) + ")");
}

witness witness_k1_small(long a, long p) {
    require_odd_prime(p, "witness_k1_small");
    if (!(a >= 1 && 2 * a < p))
        throw std::invalid_argument("witness_k1_small: need 1 <= a < p/2");
    return checked(k1_small_abacus(a, p, a, false).to_partition(), 2 * a,
                   claim_kind::br_attainer, a, p, 1, "lambda(" + std::to_string(a) + ")");
}

witness witness_kge2(long a, long p, long k) {
    require_odd_prime(p, "witness_kge2");
    if (a < 1 || a > p - 1) throw std::invalid_argument("witness_kge2: need 1 <= a <= p-1");
    if (k < 2) throw std::invalid_argument("witness_kge2: need k >= 2");
    return checked(kge2_abacus(a, p, k, 0).to_partition(), 2 * a,
                   claim_kind::br_attainer, a, p, k, "A^0");
}

witness witness_en_2a(long a, long p, long k, long target) {
    require_odd_prime(p, "witness_en_2a");
    if (a < 1 || a > p - 1) throw std::invalid_argument("witness_en_2a: need 1 <= a <= p-1");
    if (target < 1 || target > 2 * a)
        throw std::invalid_argument("witness_en_2a: target must be in 1.." + std::to_string(2 * a));
    if (k == 1) {
        if (2 * a > p)
            throw std::invalid_argument("witness_en_2a: k = 1 needs a < p/2 (floor regime otherwise)");
        const long j = (target + 1) / 2;
        const bool beta = (target % 2 == 1);
        return checked(k1_small_abacus(a, p, j, beta).to_partition(), target,
                       target == 2 * a ? claim_kind::br_attainer : claim_kind::en_attainer, a, p, 1,
                       (beta ? "beta(" : "lambda(") + std::to_string(j) + ")");
    }
    if (k >= 2) {
        if (target <= a)
            return checked(kge2_low_abacus(a, p, k, target).to_partition(), target,
                           claim_kind::en_attainer, a, p, k, "drop(" + std::to_string(target) + ")");
        const long j = 2 * a - target;
        return checked(kge2_abacus(a, p, k, j).to_partition(), target,
                       target == 2 * a ? claim_kind::br_attainer : claim_kind::en_attainer, a, p, k,
                       "A^" + std::to_string(j));
    }
    throw std::invalid_argument("witness_en_2a: need k >= 1");
}

witness witness_beta_floor(long a, long p) {
    const floor_case fc = make_floor_case(a, p);
    return checked(floor_base_abacus(fc).to_partition(), p - 1 + 2 * fc.q,
                   claim_kind::br_attainer, a, p, 1, "beta-floor");
}

witness witness_en_floor(long a, long p, long target) {
    const floor_case fc = make_floor_case(a, p);
    const long br = p - 1 + 2 * fc.q;
    if (target < 1 || target > br)
        throw std::invalid_argument("witness_en_floor: target must be in 1.." + std::to_string(br));
    const auto en = [&](abacus ab, std::string family) {
        return checked(ab.to_partition(), target,
                       target == br ? claim_kind::br_attainer : claim_kind::en_attainer, a, p, 1,
                       std::move(family));
    };
    if (target == 1) {
        partition row;
        row.parts = {static_cast<int>(a * p)};
        return checked(std::move(row), 1, claim_kind::en_attainer, a, p, 1, "trivial");
    }
    if (target % 2 == 0) {
        if (target >= 2 * fc.q) return en(floor_even_abacus(fc, (br - target) / 2), "B-step");
        return en(floor_even_low_abacus(fc, (2 * fc.q - target) / 2), "A-step");
    }
    if (fc.q == 0) return en(floor_odd_swap_abacus(fc, (p - 2 - target) / 2), "C'-step");
    if (target >= 2 * fc.q + 1) return en(floor_odd_abacus(fc, (br - 1 - target) / 2), "C-step");
    return en(floor_odd_low_abacus(fc, (2 * fc.q + 1 - target) / 2), "CA-step");
}

std::vector<witness> witness_family(long a, long p, long k) {
    std::vector<witness> out;
    if (k == 0) {
        for (long t = 1; t <= pronic_floor(2 * a); ++t) out.push_back(witness_k0(a, p, t));
        return out;
    }
    if (k == 1 && 2 * a > p) {
        const floor_case fc = make_floor_case(a, p);
        for (long t = 1; t <= p - 1 + 2 * fc.q; ++t) out.push_back(witness_en_floor(a, p, t));
        return out;
    }
    for (long t = 1; t <= 2 * a; ++t) out.push_back(witness_en_2a(a, p, k, t));
    return out;
}

}  // namespace youngp
