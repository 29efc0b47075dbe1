// Throughput comparison of the serial reference grid kernel against
// the OpenMP one, per route. Both must produce identical records; this
// only measures, the equivalence test lives in tests/test_grid.cpp.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jacobilie/grid.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(jacobilie::Route route, jacobilie::Execution exec,
              const std::vector<double>& u_values, const std::vector<double>& kappas) {
    const auto t0 = Clock::now();
    const auto records = jacobilie::evaluate_grid(u_values, kappas, route, exec);
    const auto t1 = Clock::now();
    // Touch the output so the work cannot be elided.
    volatile double sink = records.back().max_route_disagreement;
    (void)sink;
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n_u = 160;
    if (argc > 1) {
        n_u = std::max(1, std::atoi(argv[1]));
    }

    std::vector<double> u_values;
    u_values.reserve(static_cast<std::size_t>(n_u));
    for (int i = 0; i < n_u; ++i) {
        u_values.push_back(8.0 * (i + 0.5) / n_u);
    }
    const std::vector<double> kappas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif
    std::printf("grid: %d x %zu points\n\n", n_u, kappas.size());
    std::printf("%-10s %-10s %12s %10s\n", "route", "exec", "time [ms]", "speedup");

    const struct {
        const char* name;
        jacobilie::Route route;
    } routes[] = {{"ode", jacobilie::Route::ode},
                  {"integral", jacobilie::Route::integral},
                  {"oracle", jacobilie::Route::oracle},
                  {"all", jacobilie::Route::all}};

    for (const auto& r : routes) {
        // warmup
        run_ms(r.route, jacobilie::Execution::serial, u_values, kappas);
        const double serial = run_ms(r.route, jacobilie::Execution::serial, u_values, kappas);
        const double parallel = run_ms(r.route, jacobilie::Execution::parallel, u_values, kappas);
        std::printf("%-10s %-10s %12.2f %10s\n", r.name, "serial", serial, "1.00x");
        std::printf("%-10s %-10s %12.2f %9.2fx\n", r.name, "parallel", parallel,
                    serial / parallel);
    }
    return 0;
}
