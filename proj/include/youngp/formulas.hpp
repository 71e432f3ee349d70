#pragma once

#include <vector>

#include "youngp/partition.hpp"

namespace youngp {

/* Largest y >= 0 with y(y+1) <= x, by integer search.  No floating
 * point anywhere in the formula layer. */
long pronic_floor(long x);

/* Best total of pronic_floor over at most L nonnegative summands with
 * sum <= a, by dynamic programming.  phi(a, 0) = 0. */
long phi(long a, long L);

/* Branching number br(a*p^k) for 1 <= a <= p-1, closed form:
 *   k = 0:                          pronic_floor(2a)
 *   k = 1 and p/2 < a < p (p odd):  p - 1 + 2*floor((2a-(p-1))/6)
 *   otherwise:                      2a
 * For p = 2 the value is 1 for every k. */
long br_prime_power(long a, long p, long k);

/* br(n) from the digit recursion seeded by br_prime_power:
 * br(n) = br(a_1 p^{e_1}) + sum_{j>=2} phi(a_j, br(m_j)), digits taken
 * lowest first with m_j the value of the digits below a_j. */
long br_recursive(long n, long p);

/* Digit upper bound B_n = br(a_1 p^{e_1}) + sum_{j>=2} floor(a_j / 2). */
long br_upper_bound(long n, long p);

struct bound_report {
    long n = 0;
    long prime = 0;
    long br = 0;
    long upper = 0;    // B_n
    long epsilon = 0;  // B_n - br(n)
    bool within_log_bound = false;
};

/* Integer-exact check of epsilon < (p/2) log2(p): compares 4^epsilon
 * against p^p, no transcendentals. */
bool epsilon_within_bound(long epsilon, long p);
bound_report bounds(long n, long p);

/* Parameters of the k = 1, p/2 < a < p regime: x = a - (p-1)/2 written
 * as 3q + delta. */
struct floor_case {
    long prime = 0;
    long a = 0;
    long x = 0;
    long q = 0;
    long delta = 0;
};
floor_case make_floor_case(long a, long p);

/* max of sum floor(sqrt(b_i)) over slots nonnegative b_i with total
 * budget; exact DP with integer square roots. */
long max_sqrt_sum(long budget, long slots);

/* Doubled-abacus maximum M(2a) = p - 1 + floor(2x/3) for the floor-case
 * regime, computed both in closed form and by max_sqrt_sum(2a, p-1);
 * throws std::logic_error if the two disagree. */
long m_doubled(long a, long p);

}  // namespace youngp
