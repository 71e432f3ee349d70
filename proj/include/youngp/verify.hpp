#pragma once

#include <string>
#include <vector>

#include "youngp/branching.hpp"

namespace youngp::verify {

/* One verification sweep.  An instance beyond the oracle budget is
 * counted as skipped, never as passed; a suite passes only if it ran at
 * least one instance and none failed. */
struct suite_result {
    std::string name;
    long checked = 0;
    long skipped = 0;
    std::vector<std::string> failures;

    enum class state { pass, fail, skip };
    state status() const {
        if (!failures.empty()) return state::fail;
        if (checked == 0 || skipped > 0) return state::skip;
        return state::pass;
    }
    bool passed() const { return status() == state::pass; }
};

/* br from the digit recursion == br from the oracle, and E_n is the full
 * interval {1,...,br(n)}, for n in [from, to]. */
suite_result check_recursion(long p, long from, long to, oracle_budget budget, int jobs);

/* Closed form br(a p^k) == oracle value, k in {0, 1} everywhere plus the
 * k = 2 points that fit the budget. */
suite_result check_base_values(long p, oracle_budget budget, int jobs);

/* p = 2: every level has br = 1 (each vertex has a unique parent). */
suite_result check_unique_parent(long to, oracle_budget budget, int jobs);

/* 1 <= br(n) <= B_n for n <= to, equality when all digits are <= 3, and
 * the integer-exact epsilon bound (with epsilon = 0 for p in {2,3}). */
suite_result check_bounds(long p, long to);

/* Core map well-defined + surjective for every p'-partition of every
 * n in [from, to] not of the form a p^k. */
suite_result check_core_map(long p, long from, long to, int jobs);

/* br(n, gamma) = |gamma^-_{p'}| + phi(a, |gamma^-_{p'}|) over all
 * p'-cores gamma, and br(n) = br(m) + phi(a, br(m)), n <= to. */
suite_result check_core_identity(long p, long to);

/* Weight-delta law vs full recomputation: exhaustive over partitions of
 * n <= to for e in {2,3,5,7}, plus `samples` randomized abaci. */
suite_result check_abacus_laws(long to, long samples, unsigned seed);

/* Two-runner removable-bead ranges: {1,...,f(x)+1} above (1), max
 * isqrt(x) above the empty partition, x <= xmax. */
suite_result check_two_runner(long xmax);

/* Every witness family over its whole parameter region for the prime,
 * k <= kmax; families jointly cover {1,...,br(a p^k)}. */
suite_result check_witnesses(long p, long kmax);

/* Degree-valuation, iterated-core and tower tests agree on all of P(n),
 * n <= to. */
suite_result check_triangle(long p, long to);

std::vector<std::string> suite_names();
/* Dispatch by name; throws std::invalid_argument for unknown names. */
suite_result run_suite(const std::string& name, long p, long from, long to,
                       oracle_budget budget, int jobs);

}  // namespace youngp::verify
