/* Benchmark of the oracle level survey: the serial reference loop
 * against the OpenMP kernel, checking that both produce the same report. */

#include <chrono>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "youngp/branching.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace youngp;

namespace {
double seconds(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}
}  // namespace

int main(int argc, char** argv) {
    int jobs = 2;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    if (argc > 1) jobs = std::stoi(argv[1]);

    const oracle_budget budget{40, 100};
    struct point {
        long n, p;
    };
    const std::vector<point> points{{36, 3}, {40, 3}, {40, 5}, {56, 3}, {60, 5}, {95, 2}};

    std::cout << "oracle level survey, serial reference vs OpenMP (" << jobs << " threads)\n";
    std::cout << std::setw(6) << "n" << std::setw(4) << "p" << std::setw(12) << "serial[s]"
              << std::setw(12) << "parallel[s]" << std::setw(10) << "speedup" << std::setw(8)
              << "equal" << '\n';
    for (point pt : points) {
        br_report serial, parallel;
        const double ts = seconds([&] { serial = br_oracle_serial(pt.n, pt.p, budget); });
        const double tp =
            seconds([&] { parallel = br_oracle_parallel(pt.n, pt.p, budget, jobs); });
        const bool equal = serial.br == parallel.br && serial.en_values == parallel.en_values &&
                           serial.witnesses == parallel.witnesses;
        std::cout << std::setw(6) << pt.n << std::setw(4) << pt.p << std::setw(12) << std::fixed
                  << std::setprecision(3) << ts << std::setw(12) << tp << std::setw(10)
                  << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0) << std::setw(8)
                  << (equal ? "yes" : "NO") << '\n';
        if (!equal) return 1;
    }
    return 0;
}
