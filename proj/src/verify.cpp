#include "youngp/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "youngp/constructions.hpp"
#include "youngp/formulas.hpp"
#include "youngp/pprime.hpp"

namespace youngp::verify {

namespace {

std::string repro_br(long p, long n) {
    std::ostringstream os;
    os << " (repro: youngp br --prime " << p << " --from " << n << " --to " << n
       << " --oracle-budget " << std::max(n, 60L) << ")";
    return os.str();
}

bool en_is_interval(const br_report& rep) {
    if (rep.en_values.empty()) return false;
    for (long v = 1; v <= rep.br; ++v)
        if (!std::binary_search(rep.en_values.begin(), rep.en_values.end(), v)) return false;
    return static_cast<long>(rep.en_values.size()) == rep.br;
}

}  // namespace

suite_result check_recursion(long p, long from, long to, oracle_budget budget, int jobs) {
    suite_result res{"recursion", 0, 0, {}};
    for (long n = std::max(from, 1L); n <= to; ++n) {
        if (n > budget.tower_max) {
            res.skipped++;
            continue;
        }
        br_report rep = br_oracle(n, p, budget, jobs);
        const long formula = br_recursive(n, p);
        res.checked++;
        if (formula != rep.br)
            res.failures.push_back("n=" + std::to_string(n) + ": recursion gives " +
                                   std::to_string(formula) + ", oracle gives " +
                                   std::to_string(rep.br) + repro_br(p, n));
        if (!en_is_interval(rep))
            res.failures.push_back("n=" + std::to_string(n) +
                                   ": E_n is not the full interval {1,...,br}" + repro_br(p, n));
    }
    return res;
}

suite_result check_base_values(long p, oracle_budget budget, int jobs) {
    suite_result res{"base-values", 0, 0, {}};
    const long kmax = (p == 2) ? 6 : 2;
    for (long k = 0; k <= kmax; ++k) {
        for (long a = 1; a <= p - 1; ++a) {
            const long n = a * ipow(p, k);
            if (k <= 1) {
                if (n > budget.tower_max) {
                    res.skipped++;
                    continue;
                }
            } else if (n > budget.tower_max) {
                continue;  // deeper prime powers only where the budget allows
            }
            br_report rep = br_oracle(n, p, budget, jobs);
            const long formula = br_prime_power(a, p, k);
            res.checked++;
            if (formula != rep.br)
                res.failures.push_back("a=" + std::to_string(a) + " k=" + std::to_string(k) +
                                       ": closed form " + std::to_string(formula) +
                                       ", oracle " + std::to_string(rep.br) + repro_br(p, n));
        }
    }
    return res;
}

suite_result check_unique_parent(long to, oracle_budget budget, int jobs) {
    suite_result res{"unique-parent", 0, 0, {}};
    for (long n = 1; n <= to; ++n) {
        if (n > budget.tower_max) {
            res.skipped++;
            continue;
        }
        br_report rep = br_oracle(n, 2, budget, jobs);
        res.checked++;
        if (rep.br != 1 || rep.en_values != std::vector<long>{1})
            res.failures.push_back("n=" + std::to_string(n) + ": br(n,2) = " +
                                   std::to_string(rep.br) + ", expected 1" + repro_br(2, n));
    }
    return res;
}

suite_result check_bounds(long p, long to) {
    suite_result res{"bounds", 0, 0, {}};
    for (long n = 1; n <= to; ++n) {
        bound_report r = bounds(n, p);
        res.checked++;
        if (!(1 <= r.br && r.br <= r.upper)) {
            res.failures.push_back("n=" + std::to_string(n) + ": br=" + std::to_string(r.br) +
                                   " outside [1, B_n=" + std::to_string(r.upper) + "]");
            continue;
        }
        bool digits_small = true;
        for (auto [d, e] : padic_digits(n, p).digits)
            if (d > 3) digits_small = false;
        if (digits_small && r.epsilon != 0)
            res.failures.push_back("n=" + std::to_string(n) +
                                   ": all digits <= 3 but epsilon = " + std::to_string(r.epsilon));
        if (!r.within_log_bound)
            res.failures.push_back("n=" + std::to_string(n) + ": 4^epsilon >= p^p (epsilon = " +
                                   std::to_string(r.epsilon) + ")");
        if ((p == 2 || p == 3) && r.epsilon != 0)
            res.failures.push_back("n=" + std::to_string(n) + ": epsilon = " +
                                   std::to_string(r.epsilon) + " nonzero at p = " +
                                   std::to_string(p));
    }
    return res;
}

suite_result check_core_map(long p, long from, long to, int jobs) {
    (void)jobs;
    suite_result res{"coremap", 0, 0, {}};
    for (long n = std::max(from, static_cast<long>(p) + 1); n <= to; ++n) {
        const long k = top_exponent(n, p);
        if (k < 1) continue;
        const long pk = ipow(p, k);
        const long m = n % pk;
        if (m == 0) continue;  // n = a p^k has no core level below it
        for (const partition& lam : pprime_partitions(n, p)) {
            core_map_report rep = core_map_check(lam, p, k);
            res.checked++;
            if (!rep.well_defined)
                res.failures.push_back("n=" + std::to_string(n) + " lambda=" + to_string(lam) +
                                       ": core map leaves mu^-_{p'}");
            if (!rep.surjective)
                res.failures.push_back("n=" + std::to_string(n) + " lambda=" + to_string(lam) +
                                       ": core map not onto mu^-_{p'}");
        }
    }
    return res;
}

suite_result check_core_identity(long p, long to) {
    suite_result res{"core-identity", 0, 0, {}};
    for (long n = p + 1; n <= to; ++n) {
        const long k = top_exponent(n, p);
        if (k < 1) continue;
        const long pk = ipow(p, k);
        const long a = n / pk;
        const long m = n % pk;
        if (m == 0) continue;
        /* br(n) = br(m) + phi(a, br(m)), both sides from the oracle */
        br_report rep_n = br_oracle(n, p);
        br_report rep_m = br_oracle(m, p);
        res.checked++;
        if (rep_n.br != rep_m.br + phi(a, rep_m.br))
            res.failures.push_back("n=" + std::to_string(n) + ": br(n) != br(m) + phi(a, br(m))" +
                                   repro_br(p, n));
        for (const partition& gamma : pprime_partitions(m, p)) {
            const long ell = static_cast<long>(restrict_pprime(gamma, p).size());
            const long want = ell + phi(a, ell);
            const long got = br_of_core_oracle(n, gamma, p);
            res.checked++;
            if (got != want)
                res.failures.push_back("n=" + std::to_string(n) + " gamma=" + to_string(gamma) +
                                       ": br(n,gamma) = " + std::to_string(got) + ", formula " +
                                       std::to_string(want));
        }
    }
    return res;
}

suite_result check_abacus_laws(long to, long samples, unsigned seed) {
    suite_result res{"abacus", 0, 0, {}};
    auto check_one = [&](const abacus& a, const std::string& what) {
        const long w = a.weight();
        for (bead b : a.removable_beads()) {
            res.checked++;
            const long predicted = a.weight_delta_on_slide(b);
            const long actual = a.slide_left(b).weight() - w;
            if (predicted != actual)
                res.failures.push_back(what + " bead(" + std::to_string(b.row) + "," +
                                       std::to_string(b.runner) + "): law gives " +
                                       std::to_string(predicted) + ", recompute gives " +
                                       std::to_string(actual));
        }
    };
    for (int e : {2, 3, 5, 7}) {
        for (int n = 0; n <= to; ++n) {
            for_each_partition(n, [&](const partition& lam) {
                abacus a = abacus::of_partition(lam, e);
                check_one(a, "lam=" + to_string(lam) + " e=" + std::to_string(e));
                // the slide law rests on these, keep them under the same sweep
                if (a.to_partition() != lam)
                    res.failures.push_back("roundtrip failed for " + to_string(lam));
                if (a.weight() * e != lam.n() - core_of(lam, e).n())
                    res.failures.push_back("weight identity failed for " + to_string(lam));
                long rem = 0;
                for (int j = 0; j < e; ++j) rem += a.removable_on_runner(j);
                if (rem != static_cast<long>(removable_nodes(lam).size()))
                    res.failures.push_back("removable-bead count failed for " + to_string(lam));
            });
        }
    }
    std::mt19937 rng(seed);
    for (long s = 0; s < samples; ++s) {
        std::uniform_int_distribution<int> epick(2, 7);
        const int e = epick(rng);
        abacus a(e, 0);
        std::uniform_int_distribution<int> coin(0, 2);
        for (int j = 0; j < e; ++j)
            for (long row = 0; row <= 14; ++row)
                if (coin(rng) == 0) a.add_bead(row, j);
        check_one(a, "random#" + std::to_string(s));
    }
    return res;
}

suite_result check_two_runner(long xmax) {
    suite_result res{"two-runner", 0, 0, {}};
    const partition one({1});
    for (long x = 0; x <= xmax; ++x) {
        std::set<long> above_one = two_runner_rem_range(one, static_cast<int>(x));
        std::set<long> expect;
        for (long r = 1; r <= pronic_floor(x) + 1; ++r) expect.insert(r);
        res.checked++;
        if (above_one != expect)
            res.failures.push_back("x=" + std::to_string(x) +
                                   ": range above (1) is not {1,...,f(x)+1}");
        std::set<long> above_empty = two_runner_rem_range(partition{}, static_cast<int>(x));
        long isq = 0;
        while ((isq + 1) * (isq + 1) <= x) ++isq;
        res.checked++;
        if (*above_empty.rbegin() != isq)
            res.failures.push_back("x=" + std::to_string(x) +
                                   ": max above empty is not isqrt(x)");
    }
    return res;
}

suite_result check_witnesses(long p, long kmax) {
    suite_result res{"witnesses", 0, 0, {}};
    if (p == 2) kmax = 0;  // the k >= 1 families need an odd prime
    for (long k = 0; k <= kmax; ++k) {
        for (long a = 1; a <= p - 1; ++a) {
            if (k == 1 && 2 * a == p) continue;  // cannot happen for odd p
            try {
                std::vector<witness> family = witness_family(a, p, k);
                std::set<long> values;
                for (const witness& w : family) {
                    res.checked++;
                    values.insert(w.claimed_value);
                    if (w.lam.n() != a * ipow(p, k))
                        res.failures.push_back("a=" + std::to_string(a) + " k=" + std::to_string(k) +
                                               ": witness " + w.family + " has wrong size");
                }
                const long br = br_prime_power(a, p, k);
                if (static_cast<long>(values.size()) != br || *values.begin() != 1 ||
                    *values.rbegin() != br)
                    res.failures.push_back("a=" + std::to_string(a) + " k=" + std::to_string(k) +
                                           ": family does not cover {1,...," + std::to_string(br) +
                                           "}");
            } catch (const std::exception& ex) {
                res.failures.push_back("a=" + std::to_string(a) + " k=" + std::to_string(k) + ": " +
                                       ex.what());
            }
        }
    }
    return res;
}

suite_result check_triangle(long p, long to) {
    suite_result res{"triangle", 0, 0, {}};
    for (int n = 0; n <= to; ++n) {
        for_each_partition(n, [&](const partition& lam) {
            res.checked++;
            const bool by_valuation = degree_p_valuation(lam, p) == 0;
            const bool by_cores = macdonald_test(lam, p);
            const bool by_tower = tower_test(compute_core_tower(lam, p));
            if (by_valuation != by_cores || by_cores != by_tower)
                res.failures.push_back("lam=" + to_string(lam) + ": valuation/core/tower tests " +
                                       "disagree (" + std::to_string(by_valuation) + "/" +
                                       std::to_string(by_cores) + "/" +
                                       std::to_string(by_tower) + ")");
        });
    }
    return res;
}

std::vector<std::string> suite_names() {
    return {"recursion",     "base-values", "unique-parent", "bounds",   "coremap",
            "core-identity", "abacus",      "two-runner",    "witnesses", "triangle"};
}

suite_result run_suite(const std::string& name, long p, long from, long to, oracle_budget budget,
                       int jobs) {
    if (name == "recursion") return check_recursion(p, from, to, budget, jobs);
    if (name == "base-values") return check_base_values(p, budget, jobs);
    if (name == "unique-parent")
        return check_unique_parent(p == 2 ? to : std::min(to, 100L), budget, jobs);
    if (name == "bounds") return check_bounds(p, std::max(to, 10000L));
    if (name == "coremap") return check_core_map(p, from, to, jobs);
    if (name == "core-identity") return check_core_identity(p, std::min(to, 40L));
    if (name == "abacus") return check_abacus_laws(std::min(to, 18L), 1000, 20240817u);
    if (name == "two-runner") return check_two_runner(30);
    if (name == "witnesses") return check_witnesses(p, 2);
    if (name == "triangle") return check_triangle(p, std::min(to, 30L));
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace youngp::verify
