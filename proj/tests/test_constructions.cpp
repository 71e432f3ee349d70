#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "youngp/branching.hpp"
#include "youngp/constructions.hpp"
#include "youngp/formulas.hpp"
#include "youngp/pprime.hpp"

using namespace youngp;

TEST_CASE("staircase witnesses below p") {
    witness w = witness_k0(4, 5, {});
    CHECK(w.claimed_value == pronic_floor(8));
    CHECK(w.lam.n() == 4);
    CHECK(witness_k0(4, 5, 1).lam == partition({4}));
    CHECK_THROWS_AS(witness_k0(5, 5, {}), std::invalid_argument);
    CHECK_THROWS_AS(witness_k0(4, 5, 3), std::invalid_argument);
}

TEST_CASE("interleaved staircase at n = ap, a < p/2") {
    CHECK(witness_k1_small(2, 5).lam == partition({4, 3, 2, 1}));
    CHECK(witness_k1_small(2, 5).claimed_value == 4);
    CHECK(witness_k1_small(1, 3).lam == partition({2, 1}));
    CHECK(witness_k1_small(1, 3).claimed_value == 2);
    CHECK(witness_k1_small(3, 7).lam == partition({6, 5, 4, 3, 2, 1}));
    CHECK(witness_k1_small(3, 7).claimed_value == 6);
    CHECK_THROWS_AS(witness_k1_small(3, 5), std::invalid_argument);  // floor regime
    CHECK_THROWS_AS(witness_k1_small(1, 2), std::invalid_argument);
}

TEST_CASE("deep-row witnesses at n = ap^k, k >= 2") {
    witness w9 = witness_kge2(1, 3, 2);
    CHECK(w9.lam.n() == 9);
    CHECK(w9.claimed_value == 2);

    witness w18 = witness_kge2(2, 3, 2);
    CHECK(w18.lam.n() == 18);
    CHECK(w18.claimed_value == 4);

    /* the p-quotient is concentrated on the first component as the
     * rectangle (p^{k-1})^a */
    core_quotient cq = core_and_quotient(w18.lam, 3);
    CHECK(cq.quotient[0] == partition({3, 3}));
    CHECK(cq.quotient[1] == partition{});
    CHECK(cq.quotient[2] == partition{});

    core_quotient cq9 = core_and_quotient(w9.lam, 3);
    CHECK(cq9.quotient[0] == partition({3}));

    CHECK_THROWS_AS(witness_kge2(2, 3, 1), std::invalid_argument);
}

TEST_CASE("every intermediate value at n = ap^k") {
    CHECK(witness_en_2a(2, 5, 1, 2).lam == partition({9, 1}));
    CHECK(witness_en_2a(2, 5, 1, 1).lam == partition({6, 1, 1, 1, 1}));
    CHECK(witness_en_2a(2, 3, 2, 3).claimed_value == 3);
    CHECK(witness_en_2a(2, 3, 2, 3).family == "A^1");
    CHECK_THROWS_AS(witness_en_2a(6, 5, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(witness_en_2a(2, 5, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(witness_en_2a(4, 5, 1, 2), std::invalid_argument);  // floor regime
}

TEST_CASE("floor-regime maximum") {
    witness w15 = witness_beta_floor(3, 5);
    CHECK(w15.lam.n() == 15);
    CHECK(w15.claimed_value == 4);

    witness w28 = witness_beta_floor(4, 7);
    CHECK(w28.lam.n() == 28);
    CHECK(w28.claimed_value == 6);

    witness w35 = witness_beta_floor(5, 7);
    CHECK(w35.lam.n() == 35);
    CHECK(w35.claimed_value == 6);

    witness w42 = witness_beta_floor(6, 7);  // q = 1
    CHECK(w42.lam.n() == 42);
    CHECK(w42.claimed_value == 8);

    CHECK_THROWS_AS(witness_beta_floor(2, 5), std::invalid_argument);
}

TEST_CASE("floor-regime intermediate values") {
    CHECK(witness_en_floor(3, 5, 2).claimed_value == 2);
    CHECK(witness_en_floor(3, 5, 1).lam == partition({15}));
    witness w = witness_en_floor(4, 7, 5);
    CHECK(w.claimed_value == 5);
    CHECK(w.lam.n() == 28);
    CHECK_THROWS_AS(witness_en_floor(3, 5, 5), std::invalid_argument);
}

TEST_CASE("families cover the whole interval") {
    for (long p : {3L, 5L, 7L})
        for (long k = 0; k <= 2; ++k)
            for (long a = 1; a <= p - 1; ++a) {
                const long br = br_prime_power(a, p, k);
                std::set<long> values;
                for (const witness& w : witness_family(a, p, k)) {
                    values.insert(w.claimed_value);
                    CHECK(w.lam.n() == a * ipow(p, k));
                }
                CHECK(static_cast<long>(values.size()) == br);
                CHECK(*values.begin() == 1);
                CHECK(*values.rbegin() == br);
            }
}

TEST_CASE("floor families at larger primes") {
    /* exercises the q >= 1 regimes that p <= 7 cannot reach:
     * (9,11), (10,11) have q = 1 with delta != 0, (12,13) has q = 2,
     * (16,17) has q = 2 with delta = 2 */
    for (auto [a, p] : std::vector<std::pair<long, long>>{{9, 11}, {10, 11}, {12, 13}, {16, 17}}) {
        const long br = br_prime_power(a, p, 1);
        std::set<long> values;
        for (long t = 1; t <= br; ++t) values.insert(witness_en_floor(a, p, t).claimed_value);
        CHECK(static_cast<long>(values.size()) == br);
        CHECK(*values.rbegin() == br);
    }
}

TEST_CASE("core-empty partitions obey the doubling bound") {
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const partition& lam) {
            for (int e : {2, 3, 5, 9}) {
                if (!core_of(lam, e).empty()) continue;
                if (lam.empty()) continue;
                CHECK(static_cast<long>(restrict_all(lam).size()) <= 2 * weight_of(lam, e));
            }
        });
}
