#pragma once

// Batch evaluation of sn/cn/dn over (u, kappa) grids by any of the
// three routes. Points are independent, so the kernel comes in two
// interchangeable flavors: a serial reference and an OpenMP-parallel
// version that must produce bit-identical records in the same
// deterministic kappa-major order. tools/bench_grid compares their
// throughput.

#include <optional>
#include <span>
#include <vector>

#include "jacobilie/jacobiode.hpp"

namespace jacobilie {

enum class Route { ode, integral, oracle, all };

enum class Execution { serial, parallel };

struct RouteValues {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

// One evaluated point. Only the requested routes are populated;
// max_route_disagreement is the max pairwise absolute difference of
// sn/cn/dn across the populated routes (0 when fewer than two).
struct OutputRecord {
    double u = 0.0;
    double kappa = 0.0;
    std::optional<RouteValues> ode;
    std::optional<RouteValues> integral;
    std::optional<RouteValues> oracle;
    double max_route_disagreement = 0.0;
};

// Max pairwise absolute difference across the populated routes.
double route_disagreement(const OutputRecord& rec);

// Integral-route values for arbitrary u: invert_asn on the fundamental
// interval [0, K], extended by the quarter-period reflections
// sn(2K-u) = sn(u), cn(2K-u) = -cn(u) and the 4K periodicity, with
// cn, dn reconstructed from the square-root relations. K comes from
// quadrature, so the route stays independent of the ODE path.
RouteValues integral_route_values(double u, double kappa);

OutputRecord evaluate_point(double u, double kappa, Route route,
                            const IntegratorConfig& cfg = {});

// kappa-major, u ascending within each kappa; records land at index
// ki * u_values.size() + ui regardless of execution mode.
std::vector<OutputRecord> evaluate_grid(std::span<const double> u_values,
                                        std::span<const double> kappas, Route route,
                                        Execution exec = Execution::serial,
                                        const IntegratorConfig& cfg = {});

} // namespace jacobilie
