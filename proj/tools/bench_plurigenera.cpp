// Benchmark: serial reference evaluation (per-m direct summation of local
// terms, arbitrary-precision throughout) against the prefix-table kernel with
// a shared denominator (64-bit fast path, OpenMP across the window). Both are
// exact; the run fails if they ever disagree.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "tfold/fixtures.hpp"
#include "tfold/riemann_roch.hpp"

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the serial reference plurigenus evaluation with the parallel kernel"};
    std::vector<long long> m_values{500, 2000, 7020};
    app.add_option("--m-max", m_values, "window upper ends to benchmark (window is [2, m])")
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    tfold::ThreefoldData X = tfold::chen_delta18();
    const int threads = max_threads();
    std::printf("%8s %14s %16s %16s %9s %9s\n", "m_max", "reference_ms", "kernel_1thr_ms",
                "kernel_pll_ms", "speedup", "equal");

    bool all_equal = true;
    for (long long m_max : m_values) {
        auto t0 = std::chrono::steady_clock::now();
        auto reference = tfold::plurigenus_window_reference(X, 2, m_max);
        double ref_ms = ms_since(t0);

        set_threads(1);
        t0 = std::chrono::steady_clock::now();
        auto serial = tfold::plurigenus_window(X, 2, m_max);
        double one_ms = ms_since(t0);

        set_threads(threads);
        t0 = std::chrono::steady_clock::now();
        auto parallel = tfold::plurigenus_window(X, 2, m_max);
        double par_ms = ms_since(t0);

        bool equal = reference == serial && serial == parallel;
        all_equal = all_equal && equal;
        std::printf("%8lld %14.2f %16.3f %16.3f %8.1fx %9s\n", m_max, ref_ms, one_ms, par_ms,
                    par_ms > 0 ? ref_ms / par_ms : 0.0, equal ? "yes" : "NO");
    }
    std::printf("threads: %d\n", threads);
    return all_equal ? 0 : 1;
}
