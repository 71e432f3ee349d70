#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "youngp/branching.hpp"
#include "youngp/verify.hpp"

using namespace youngp;

/* The OpenMP kernel must reproduce the serial reference report bit for
 * bit: same br, same value set, same lexicographically-least witnesses. */
TEST_CASE("parallel survey equals the serial reference") {
    const oracle_budget budget{40, 100};
    for (long n : {8L, 17L, 26L, 34L, 40L, 47L, 55L})
        for (long p : {2L, 3L, 5L}) {
            br_report serial = br_oracle_serial(n, p, budget);
            for (int jobs : {2, 3, 4}) {
                br_report parallel = br_oracle_parallel(n, p, budget, jobs);
                CHECK(parallel.n == serial.n);
                CHECK(parallel.br == serial.br);
                CHECK(parallel.en_values == serial.en_values);
                CHECK(parallel.witnesses == serial.witnesses);
            }
        }
}

TEST_CASE("parallel runs are reproducible") {
    br_report a = br_oracle(36, 3, {}, 4);
    br_report b = br_oracle(36, 3, {}, 4);
    CHECK(a.br == b.br);
    CHECK(a.en_values == b.en_values);
    CHECK(a.witnesses == b.witnesses);
}

TEST_CASE("verification sweeps accept a jobs parameter") {
    verify::suite_result serial = verify::check_recursion(3, 1, 20, {}, 1);
    verify::suite_result parallel = verify::check_recursion(3, 1, 20, {}, 4);
    CHECK(serial.passed());
    CHECK(parallel.passed());
    CHECK(serial.checked == parallel.checked);
}
