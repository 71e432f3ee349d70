#pragma once

#include <functional>
#include <vector>

#include "youngp/abacus.hpp"
#include "youngp/partition.hpp"

namespace youngp {

/* True iff the character degree of lam is coprime to p, by iterated
 * core stripping: with a*p^k <= n < (a+1)*p^k, lam qualifies iff its
 * p^k-core is a partition of n - a*p^k that qualifies in turn. */
bool macdonald_test(const partition& lam, long p);

/* The p-core tower: row v holds p^v entries, each a p-core; entry order
 * follows the quotient components depth-first.  Row digit sums s_v
 * satisfy n = sum s_v p^v, and lam has degree coprime to p exactly when
 * s_v equals the v-th p-adic digit of n for every v. */
struct core_tower {
    long prime = 0;
    std::vector<std::vector<partition>> rows;

    long level_sum(size_t v) const;
    long total() const;  // reconstructs n
};

core_tower compute_core_tower(const partition& lam, long p);
bool tower_test(const core_tower& t);
partition tower_to_partition(const core_tower& t);

/* Stream exactly the partitions of n whose character degree is coprime
 * to p, without enumerating all of P(n): towers are built row by row,
 * distributing the digit a_v over the p^v slots.  Deterministic order. */
void enumerate_pprime(long n, long p, const std::function<void(const partition&)>& fn);
std::vector<partition> pprime_partitions(long n, long p);
long count_pprime(long n, long p);

}  // namespace youngp
