#include "jacobilie/grid.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "jacobilie/ellint.hpp"
#include "jacobilie/oracle.hpp"

namespace jacobilie {

namespace {

double triple_gap(const RouteValues& a, const RouteValues& b) {
    return std::max({std::abs(a.sn - b.sn), std::abs(a.cn - b.cn), std::abs(a.dn - b.dn)});
}

} // namespace

double route_disagreement(const OutputRecord& rec) {
    const RouteValues* routes[3];
    int n = 0;
    if (rec.ode) routes[n++] = &*rec.ode;
    if (rec.integral) routes[n++] = &*rec.integral;
    if (rec.oracle) routes[n++] = &*rec.oracle;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            worst = std::max(worst, triple_gap(*routes[i], *routes[j]));
        }
    }
    return worst;
}

RouteValues integral_route_values(double u, double kappa) {
    const double quarter = complete_K(kappa);
    // Fold into [0, 4K), then onto the fundamental interval [0, K]:
    //   sn(4K - w) = -sn(w), cn(4K - w) =  cn(w)   (parity + period)
    //   sn(2K - w) =  sn(w), cn(2K - w) = -cn(w)   (reflection at K)
    double w = std::fmod(u, 4.0 * quarter);
    if (w < 0.0) {
        w += 4.0 * quarter;
    }
    double sn_sign = 1.0;
    if (w > 2.0 * quarter) {
        w = 4.0 * quarter - w;
        sn_sign = -1.0;
    }
    double cn_sign = 1.0;
    if (w > quarter) {
        w = 2.0 * quarter - w;
        cn_sign = -1.0;
    }
    const double s = invert_asn(std::min(w, quarter), kappa);
    RouteValues val;
    val.sn = sn_sign * s;
    val.cn = cn_sign * std::sqrt(std::max(0.0, (1.0 - s) * (1.0 + s)));
    val.dn = std::sqrt(std::max(0.0, 1.0 - kappa * kappa * s * s));
    return val;
}

OutputRecord evaluate_point(double u, double kappa, Route route, const IntegratorConfig& cfg) {
    OutputRecord rec;
    rec.u = u;
    rec.kappa = kappa;
    if (route == Route::ode || route == Route::all) {
        const JacobiTriple state = integrate(u, kappa, cfg);
        rec.ode = RouteValues{state.f2, -state.f3, -state.f1};
    }
    if (route == Route::integral || route == Route::all) {
        rec.integral = integral_route_values(u, kappa);
    }
    if (route == Route::oracle || route == Route::all) {
        const JacobiValues val = jacobi_agm(u, kappa);
        rec.oracle = RouteValues{val.sn, val.cn, val.dn};
    }
    rec.max_route_disagreement = route_disagreement(rec);
    return rec;
}

std::vector<OutputRecord> evaluate_grid(std::span<const double> u_values,
                                        std::span<const double> kappas, Route route,
                                        Execution exec, const IntegratorConfig& cfg) {
    const std::ptrdiff_t nu = static_cast<std::ptrdiff_t>(u_values.size());
    const std::ptrdiff_t nk = static_cast<std::ptrdiff_t>(kappas.size());
    std::vector<OutputRecord> records(static_cast<std::size_t>(nu * nk));
    const std::ptrdiff_t total = nu * nk;

    if (exec == Execution::parallel) {
        // Exceptions must not cross the parallel region; keep the first
        // one and rethrow once all threads have joined.
        std::exception_ptr pending = nullptr;
#pragma omp parallel for schedule(dynamic, 4)
        for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
            try {
                records[static_cast<std::size_t>(idx)] =
                    evaluate_point(u_values[static_cast<std::size_t>(idx % nu)],
                                   kappas[static_cast<std::size_t>(idx / nu)], route, cfg);
            } catch (...) {
#pragma omp critical(jacobilie_grid_eptr)
                if (!pending) {
                    pending = std::current_exception();
                }
            }
        }
        if (pending) {
            std::rethrow_exception(pending);
        }
    } else {
        for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
            records[static_cast<std::size_t>(idx)] =
                evaluate_point(u_values[static_cast<std::size_t>(idx % nu)],
                               kappas[static_cast<std::size_t>(idx / nu)], route, cfg);
        }
    }
    return records;
}

} // namespace jacobilie
