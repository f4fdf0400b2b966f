// Serial reference vs OpenMP kernels on the enumeration-bound workloads.
//
//   bench_landscape [n ...]     (default: 50 60 70)

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <vector>

#include <omp.h>

#include "pgraph/landscape.hpp"
#include "pgraph/transfer.hpp"

namespace {

template <class F>
double seconds(F && f)
{
    auto t0 = std::chrono::steady_clock::now();
    f();
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    return dt.count();
}

} // namespace

int main(int argc, char ** argv)
{
    using namespace pgraph;

    std::vector<mass_t> sizes;
    for (int i = 1; i < argc; ++i)
        sizes.push_back(std::strtoull(argv[i], nullptr, 10));
    if (sizes.empty())
        sizes = {50, 60, 70};

    int threads = omp_get_max_threads();
    std::cout << "threads: " << threads << "\n\n";
    std::cout << std::setw(6) << "n" << std::setw(12) << "p(n)" << std::setw(12) << "serial s"
              << std::setw(12) << "omp s" << std::setw(10) << "speedup" << "  match\n";

    int rc = 0;
    for (auto n : sizes) {
        DegreeHistogram serial, parallel;
        double ts = seconds([&] { serial = degree_histogram_serial(n); });
        double tp = seconds([&] { parallel = degree_histogram(n, threads); });
        bool match = serial == parallel;
        rc |= !match;
        std::cout << std::setw(6) << n << std::setw(12) << serial.total() << std::fixed
                  << std::setprecision(4) << std::setw(12) << ts << std::setw(12) << tp
                  << std::setw(10) << std::setprecision(2) << ts / tp << "  "
                  << (match ? "yes" : "NO") << '\n';
    }

    mass_t verify_n = 22;
    double t1 = seconds([&] { verify_degree_formula(verify_n, 1); });
    double tk = seconds([&] { verify_degree_formula(verify_n, threads); });
    std::cout << "\nverify_degree_formula(" << verify_n << "): 1 thread " << std::setprecision(4)
              << t1 << " s, " << threads << " threads " << tk << " s\n";
    return rc;
}
