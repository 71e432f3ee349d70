#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "youngp/abacus.hpp"
#include "youngp/partition.hpp"

namespace youngp {

/* One-node restriction: the set lam^- of partitions obtained by removing
 * a removable node, top corner first. */
std::vector<partition> restrict_all(const partition& lam);
/* The subset of lam^- whose character degree is coprime to p. */
std::vector<partition> restrict_pprime(const partition& lam, long p);

/* Survey of a whole level of the p'-subgraph, from exhaustive
 * enumeration.  en_values is sorted; witnesses maps each achieved value
 * to the lexicographically smallest partition achieving it. */
struct br_report {
    long n = 0;
    long prime = 0;
    long br = 0;
    std::vector<long> en_values;
    std::map<long, partition> witnesses;
};

struct oracle_budget {
    long naive_max = 40;  // enumerate all of P(n), filter by hook valuation
    long tower_max = 60;  // enumerate p'-partitions only, via towers
};

struct oracle_refused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Exact br(n), E_n and witnesses.  n <= naive_max runs the fully naive
 * route (all partitions, hook-valuation filters everywhere); otherwise
 * n <= tower_max runs the tower route; otherwise throws oracle_refused.
 * jobs > 1 fans the per-partition loop out with OpenMP; the serial body
 * is the reference implementation and both produce identical reports. */
br_report br_oracle(long n, long p, oracle_budget budget = {}, int jobs = 1);
br_report br_oracle_serial(long n, long p, oracle_budget budget = {});
br_report br_oracle_parallel(long n, long p, oracle_budget budget = {}, int jobs = 2);

/* Exact max of |lam^-_{p'}| over the p'-partitions of n with p^k-core
 * gamma, by enumerating every weight-a lift of gamma's abacus.
 * Requires n = a p^k + m with 1 <= a < p, 0 < m < p^k and gamma a
 * p'-partition of m. */
long br_of_core_oracle(long n, const partition& gamma, long p);

/* The runner set of gamma's p^k-abacus (first gap at (0,0)): runners
 * whose removable bead slides to a p'-partition of m-1. */
std::vector<int> pprime_runner_set(const partition& gamma, long e, long p);

/* Verification record for the core map lam^-_{p'} -> mu^-_{p'} given by
 * taking p^k-cores, mu the p^k-core of lam. */
struct core_map_report {
    partition lam;
    partition mu;
    long a = 0, k = 0, m = 0;
    bool well_defined = false;
    bool surjective = false;
};
core_map_report core_map_check(const partition& lam, long p, long k);

/* Edges between levels n and n-1 of the p'-subgraph, sorted. */
struct edge_list {
    long level = 0;
    long prime = 0;
    std::vector<std::pair<partition, partition>> edges;
};
edge_list edges_pprime(long n, long p);

}  // namespace youngp
