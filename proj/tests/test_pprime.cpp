#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "youngp/pprime.hpp"

using namespace youngp;

TEST_CASE("iterated core test") {
    CHECK(macdonald_test(partition({12}), 3));
    CHECK(macdonald_test(partition{}, 3));
    CHECK(!macdonald_test(partition({3, 1}), 3));
    CHECK(macdonald_test(partition({5, 1}), 3));
}

TEST_CASE("core tower") {
    CHECK(tower_test(compute_core_tower(partition{}, 5)));

    core_tower bad = compute_core_tower(partition({3, 1}), 3);
    CHECK(bad.rows[0][0] == partition({3, 1}));  // no hook length divisible by 3
    CHECK(!tower_test(bad));

    core_tower good = compute_core_tower(partition({2, 1}), 3);
    CHECK(good.level_sum(0) == 0);
    CHECK(good.level_sum(1) == 1);
    CHECK(tower_test(good));

    for (int n = 0; n <= 18; ++n)
        for_each_partition(n, [&](const partition& lam) {
            for (long p : {2L, 3L, 5L}) {
                core_tower t = compute_core_tower(lam, p);
                CHECK(t.total() == lam.n());
                for (size_t v = 0; v < t.rows.size(); ++v) {
                    CHECK(static_cast<long>(t.rows[v].size()) == ipow(p, static_cast<long>(v)));
                    for (const partition& mu : t.rows[v])
                        CHECK(core_of(mu, static_cast<int>(p)) == mu);
                }
                CHECK(tower_to_partition(t) == lam);
            }
        });
}

TEST_CASE("tower test is the iterated-core test") {
    for (int n = 0; n <= 24; ++n)
        for_each_partition(n, [&](const partition& lam) {
            for (long p : {2L, 3L, 5L, 7L})
                CHECK(tower_test(compute_core_tower(lam, p)) == macdonald_test(lam, p));
        });
}

TEST_CASE("enumeration of p'-partitions") {
    CHECK(pprime_partitions(0, 3) == std::vector<partition>{partition{}});
    CHECK(pprime_partitions(1, 5) == std::vector<partition>{partition({1})});

    const std::vector<partition> p3 = pprime_partitions(3, 3);
    std::set<partition> three(p3.begin(), p3.end());
    CHECK(three == std::set<partition>{partition({3}), partition({2, 1}), partition({1, 1, 1})});

    const std::vector<partition> p6 = pprime_partitions(6, 3);
    std::set<partition> six(p6.begin(), p6.end());
    CHECK(six == std::set<partition>{partition({6}), partition({5, 1}), partition({4, 1, 1}),
                                     partition({3, 3}), partition({3, 2, 1}), partition({2, 2, 2}),
                                     partition({3, 1, 1, 1}), partition({2, 1, 1, 1, 1}),
                                     partition({1, 1, 1, 1, 1, 1})});

    /* the fast path is exactly the naive filter */
    for (int n = 0; n <= 32; ++n)
        for (long p : {2L, 3L, 5L}) {
            std::set<partition> fast;
            long count = 0;
            enumerate_pprime(n, p, [&](const partition& lam) {
                fast.insert(lam);
                ++count;
            });
            CHECK(count == static_cast<long>(fast.size()));  // no duplicates
            std::set<partition> naive;
            for_each_partition(n, [&](const partition& lam) {
                if (degree_p_valuation(lam, p) == 0) naive.insert(lam);
            });
            CHECK(fast == naive);
        }
}

TEST_CASE("enumeration order is deterministic") {
    CHECK(pprime_partitions(17, 3) == pprime_partitions(17, 3));
}

TEST_CASE("enumeration matches the naive filter at the oracle boundary") {
    for (long p : {2L, 3L, 5L}) {
        std::vector<partition> fast = pprime_partitions(40, p);
        std::set<partition> fast_set(fast.begin(), fast.end());
        CHECK(fast.size() == fast_set.size());
        CHECK(count_pprime(40, p) == static_cast<long>(fast.size()));
        std::set<partition> naive;
        for_each_partition(40, [&](const partition& lam) {
            if (degree_p_valuation(lam, p) == 0) naive.insert(lam);
        });
        CHECK(fast_set == naive);
    }
}

TEST_CASE("conjugation closure") {
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const partition& lam) {
            for (long p : {2L, 3L, 5L})
                CHECK(macdonald_test(lam, p) == macdonald_test(conjugate(lam), p));
        });
}

TEST_CASE("counts") {
    CHECK(count_pprime(3, 3) == 3);
    CHECK(count_pprime(6, 3) == 9);
    for (long n = 0; n <= 44; ++n) {
        for (long p : {3L, 5L})
            if (n <= 32) CHECK(count_pprime(n, p) == static_cast<long>(pprime_partitions(n, p).size()));
        /* at p = 2 the count is always a power of two */
        long c = count_pprime(n, 2);
        CHECK((c & (c - 1)) == 0);
        if (n <= 32) CHECK(c == static_cast<long>(pprime_partitions(n, 2).size()));
    }
}
