#pragma once

// Reference route: sn/cn/dn by the arithmetic-geometric mean and the
// descending Landen phase recursion (Abramowitz & Stegun 17.6). Kept
// free of any code shared with the ODE or integral routes so that
// agreement between the routes is evidence, not tautology.

#include <vector>

#include "jacobilie/errors.hpp"

namespace jacobilie {

// One level of the AGM ladder: a >= b > 0 and c = (a_prev - b_prev)/2.
struct AgmState {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    int level = 0;
};

inline constexpr int kAgmMaxLevels = 40;

// Full ladder from (a0, b0) down to c ~ 0. DomainError for non-positive
// inputs; ConvergenceFailure past kAgmMaxLevels levels (quadratic
// convergence reaches double precision in well under ten).
std::vector<AgmState> agm_ladder(double a0, double b0);

// Common limit of the arithmetic/geometric iteration, converged to
// 1e-15 relative.
double agm(double a, double b);

struct JacobiValues {
    double sn = 0.0;
    double cn = 1.0;
    double dn = 1.0;
};

// Amplitude phi from the backward phase recursion
//   phi_{n-1} = (phi_n + asin((c_n/a_n) sin phi_n)) / 2,
// seeded with phi_N = 2^N a_N u on the ladder for (1, sqrt(1-kappa^2)).
// Returns (sin phi, cos phi, sqrt(1 - kappa^2 sin^2 phi)).
JacobiValues jacobi_agm(double u, double kappa);

// K(kappa) = pi / (2 agm(1, sqrt(1 - kappa^2))).
double complete_K_agm(double kappa);

} // namespace jacobilie
