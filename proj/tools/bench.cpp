// Compares the serial reference scan against the OpenMP scan on the same
// period and checks that both produce the identical stream.

#include <chrono>
#include <cstdio>
#include <string>

#include "treepat/scan.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace treepat;

namespace {

double run_ms(std::vector<ScanRecord> (*fn)(int, double), int n, std::vector<ScanRecord>* out) {
    auto t0 = std::chrono::steady_clock::now();
    *out = fn(n, 1e-10);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_n = 7;
    if (argc > 1) max_n = std::stoi(argv[1]);
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("scan benchmark, serial reference vs OpenMP (%d threads)\n", threads);
    std::printf("%4s %10s %12s %12s %8s %6s\n", "n", "patterns", "serial_ms", "parallel_ms",
                "speedup", "match");
    for (int n = 5; n <= max_n; ++n) {
        std::vector<ScanRecord> a, b;
        double ts = run_ms(scan_family_serial, n, &a);
        double tp = run_ms(scan_family_parallel, n, &b);
        bool match = a.size() == b.size();
        for (size_t i = 0; match && i < a.size(); ++i)
            match = a[i].pattern == b[i].pattern && a[i].cls.zero == b[i].cls.zero;
        std::printf("%4d %10zu %12.1f %12.1f %7.2fx %6s\n", n, a.size(), ts, tp, ts / tp,
                    match ? "yes" : "NO");
        if (!match) return 1;
    }
    return 0;
}
