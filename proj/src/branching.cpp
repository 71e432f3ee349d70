#include "youngp/branching.hpp"

#include <algorithm>
#include <set>

#include "youngp/pprime.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace youngp {

std::vector<partition> restrict_all(const partition& lam) {
    if (lam.n() < 1) throw std::invalid_argument("restrict_all: need a partition of n >= 1");
    std::vector<partition> out;
    for (node_pos pos : removable_nodes(lam)) out.push_back(remove_node(lam, pos));
    return out;
}

std::vector<partition> restrict_pprime(const partition& lam, long p) {
    std::vector<partition> out;
    for (partition& mu : restrict_all(lam))
        if (macdonald_test(mu, p)) out.push_back(std::move(mu));
    return out;
}

namespace {

/* The two oracle routes share this survey body.  `naive` selects the
 * hook-valuation filter on both the level and the children, the tower
 * route uses the iterated-core test on children. */
bool child_is_pprime(const partition& mu, long p, bool naive) {
    return naive ? degree_p_valuation(mu, p) == 0 : macdonald_test(mu, p);
}

long pprime_child_count(const partition& lam, long p, bool naive) {
    long c = 0;
    for (node_pos pos : removable_nodes(lam))
        if (child_is_pprime(remove_node(lam, pos), p, naive)) ++c;
    return c;
}

std::vector<partition> level_pool(long n, long p, bool naive) {
    if (!naive) return pprime_partitions(n, p);
    std::vector<partition> pool;
    for_each_partition(static_cast<int>(n), [&](const partition& lam) {
        if (degree_p_valuation(lam, p) == 0) pool.push_back(lam);
    });
    return pool;
}

br_report finish_report(long n, long p, std::map<long, partition> wit) {
    br_report rep;
    rep.n = n;
    rep.prime = p;
    rep.witnesses = std::move(wit);
    for (const auto& [v, lam] : rep.witnesses) rep.en_values.push_back(v);
    rep.br = rep.en_values.empty() ? 0 : rep.en_values.back();
    return rep;
}

bool pick_route_naive(long n, long p, const oracle_budget& budget) {
    if (n <= budget.naive_max) return true;
    if (n <= budget.tower_max) return false;
    throw oracle_refused("oracle: n = " + std::to_string(n) + " exceeds budget (naive <= " +
                         std::to_string(budget.naive_max) + ", tower <= " +
                         std::to_string(budget.tower_max) + ") for p = " + std::to_string(p));
}

}  // namespace

br_report br_oracle_serial(long n, long p, oracle_budget budget) {
    if (n < 1) throw std::invalid_argument("br_oracle: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("br_oracle: p must be prime");
    const bool naive = pick_route_naive(n, p, budget);
    std::map<long, partition> wit;
    for (const partition& lam : level_pool(n, p, naive)) {
        const long v = pprime_child_count(lam, p, naive);
        auto it = wit.find(v);
        if (it == wit.end() || lam < it->second) wit[v] = lam;
    }
    return finish_report(n, p, std::move(wit));
}

br_report br_oracle_parallel(long n, long p, oracle_budget budget, int jobs) {
    if (n < 1) throw std::invalid_argument("br_oracle: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("br_oracle: p must be prime");
    const bool naive = pick_route_naive(n, p, budget);
    const std::vector<partition> pool = level_pool(n, p, naive);
    if (jobs < 1) jobs = 1;
#ifdef _OPENMP
    std::vector<std::map<long, partition>> partial(static_cast<size_t>(jobs));
#pragma omp parallel num_threads(jobs)
    {
        std::map<long, partition>& wit = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 32)
        for (long i = 0; i < static_cast<long>(pool.size()); ++i) {
            const partition& lam = pool[static_cast<size_t>(i)];
            const long v = pprime_child_count(lam, p, naive);
            auto it = wit.find(v);
            if (it == wit.end() || lam < it->second) wit[v] = lam;
        }
    }
    std::map<long, partition> wit;
    for (auto& part : partial)
        for (auto& [v, lam] : part) {
            auto it = wit.find(v);
            if (it == wit.end() || lam < it->second) wit[v] = lam;
        }
    return finish_report(n, p, std::move(wit));
#else
    (void)jobs;
    std::map<long, partition> wit;
    for (const partition& lam : pool) {
        const long v = pprime_child_count(lam, p, naive);
        auto it = wit.find(v);
        if (it == wit.end() || lam < it->second) wit[v] = lam;
    }
    return finish_report(n, p, std::move(wit));
#endif
}

br_report br_oracle(long n, long p, oracle_budget budget, int jobs) {
    if (jobs <= 1) return br_oracle_serial(n, p, budget);
    return br_oracle_parallel(n, p, budget, jobs);
}

long br_of_core_oracle(long n, const partition& gamma, long p) {
    if (!is_prime(p)) throw std::invalid_argument("br_of_core_oracle: p must be prime");
    if (n < 1) throw std::invalid_argument("br_of_core_oracle: n must be >= 1");
    const long k = top_exponent(n, p);
    const long pk = ipow(p, k);
    const long a = n / pk;
    const long m = n - a * pk;
    if (k < 1 || m == 0)
        throw std::invalid_argument("br_of_core_oracle: n must be a*p^k + m with 0 < m < p^k");
    if (gamma.n() != m || !macdonald_test(gamma, p))
        throw std::invalid_argument("br_of_core_oracle: gamma must be a p'-partition of " +
                                    std::to_string(m));

    abacus base = abacus::of_partition(gamma, static_cast<int>(pk));
    base.refloor(base.floor_row() - a);

    /* Every p'-partition of n with this core is a weight-a lift of the
     * base abacus; walk the lifts runner by runner. */
    long best = 0;
    std::vector<std::pair<int, partition>> lifts;
    std::function<void(int, long)> rec = [&](int runner, long left) {
        if (runner == static_cast<int>(pk)) {
            if (left != 0) return;
            abacus b = base;
            for (const auto& [j, nu] : lifts) b.lift_runner(j, nu);
            const partition lam = b.to_partition();
            best = std::max(best, static_cast<long>(restrict_pprime(lam, p).size()));
            return;
        }
        rec(runner + 1, left);  // nothing on this runner
        for (long w = 1; w <= left; ++w) {
            for (const partition& nu : partitions_of(static_cast<int>(w))) {
                lifts.emplace_back(runner, nu);
                rec(runner + 1, left - w);
                lifts.pop_back();
            }
        }
    };
    rec(0, a);
    return best;
}

std::vector<int> pprime_runner_set(const partition& gamma, long e, long p) {
    abacus a = abacus::of_partition(gamma, static_cast<int>(e));
    std::set<int> runners;
    for (bead b : a.removable_beads())
        if (macdonald_test(a.slide_left(b).to_partition(), p)) runners.insert(b.runner);
    return {runners.begin(), runners.end()};
}

core_map_report core_map_check(const partition& lam, long p, long k) {
    if (!is_prime(p)) throw std::invalid_argument("core_map_check: p must be prime");
    const long n = lam.n();
    const long pk = ipow(p, k);
    if (k < 1 || n < pk) throw std::invalid_argument("core_map_check: need p^k <= n, k >= 1");
    const long a = n / pk;
    const long m = n - a * pk;
    if (a > p - 1 || m == 0)
        throw std::invalid_argument("core_map_check: need n = a*p^k + m, 1 <= a < p, 0 < m < p^k");
    if (!macdonald_test(lam, p))
        throw std::invalid_argument("core_map_check: lambda must be a p'-partition");

    core_map_report rep;
    rep.lam = lam;
    rep.a = a;
    rep.k = k;
    rep.m = m;
    rep.mu = core_of(lam, static_cast<int>(pk));

    std::set<partition> mu_children;
    for (partition& b : restrict_pprime(rep.mu, p)) mu_children.insert(std::move(b));
    std::set<partition> images;
    rep.well_defined = true;
    for (const partition& alpha : restrict_pprime(lam, p)) {
        partition img = core_of(alpha, static_cast<int>(pk));
        if (!mu_children.count(img)) rep.well_defined = false;
        images.insert(std::move(img));
    }
    rep.surjective = images == mu_children;
    return rep;
}

edge_list edges_pprime(long n, long p) {
    if (n < 1) throw std::invalid_argument("edges_pprime: n must be >= 1");
    edge_list el;
    el.level = n;
    el.prime = p;
    for (const partition& lam : pprime_partitions(n, p))
        for (const partition& mu : restrict_pprime(lam, p)) el.edges.emplace_back(lam, mu);
    std::sort(el.edges.begin(), el.edges.end());
    return el;
}

}  // namespace youngp
