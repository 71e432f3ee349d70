#pragma once

#include <optional>
#include <string>
#include <vector>

#include "youngp/partition.hpp"

namespace youngp {

/* Explicit extremal partitions at n = a*p^k, built from their abacus
 * descriptions.  Construction validates the claim (degree coprime to p
 * and |lam^-_{p'}| equal to claimed_value, both recomputed from scratch)
 * and throws std::logic_error on any mismatch. */
enum class claim_kind { br_attainer, en_attainer };

struct witness {
    partition lam;
    long claimed_value = 0;
    claim_kind kind = claim_kind::br_attainer;
    long a = 0, prime = 0, k = 0;
    std::string family;
};

/* k = 0: a partition of a < p with exactly `target` removable nodes
 * (every child is automatically of p'-degree).  Default target is the
 * maximum pronic_floor(2a). */
witness witness_k0(long a, long p, std::optional<long> target = {});

/* k = 1, a < p/2: the interleaved staircase (p-1,...,p-a,a,...,1),
 * value 2a. */
witness witness_k1_small(long a, long p);

/* k >= 2: value 2a, from the abacus with first gap (1,0), runner-0 beads
 * pushed down past p^{k-1} - a empty rows. */
witness witness_kge2(long a, long p, long k);

/* Every value in {1,...,2a} at n = a*p^k for the regions above:
 * k = 1 uses the lambda(j)/beta(j) families, k >= 2 the A^j/B^j abaci. */
witness witness_en_2a(long a, long p, long k, long target);

/* k = 1, p/2 < a < p: value p - 1 + 2q from the floor-case abacus. */
witness witness_beta_floor(long a, long p);

/* Every value in {1,...,br(ap)} in the floor-case regime, by the bead
 * moves that step the count down one or two at a time. */
witness witness_en_floor(long a, long p, long target);

/* All targets of the applicable family at (a, p, k); covers
 * {1,...,br(a p^k)} exactly once each. */
std::vector<witness> witness_family(long a, long p, long k);

}  // namespace youngp
