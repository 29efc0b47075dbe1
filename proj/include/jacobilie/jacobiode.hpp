#pragma once

// ODE route to sn/cn/dn. The generators realized as vector fields
// f_l(u) d/du turn the commutation relations into the coupled triplet
//
//   df1/du = -kappa^2 f2 f3
//   df2/du = +f1 f3
//   df3/du = -f1 f2
//
// with (f1, f2, f3)(0) = (-1, 0, -1). The compatibility conditions
// f2^2 + f3^2 = 1 and f1^2 + kappa^2 f2^2 = 1 identify
// f2 = sn, f3 = -cn, f1 = -dn.

#include <array>
#include <functional>

#include "jacobilie/errors.hpp"

namespace jacobilie {

// State of the triplet at argument u, modulus kappa. Along trajectories
// f2^2 + f3^2 = 1 and f1^2 + kappa^2 f2^2 = 1 hold to integrator
// accuracy, so |f2|,|f3| <= 1 and sqrt(1-kappa^2) <= |f1| <= 1.
struct JacobiTriple {
    double u = 0.0;
    double kappa = 0.0;
    double f1 = -1.0;
    double f2 = 0.0;
    double f3 = -1.0;
};

enum class StepMethod { fixed_rk4, adaptive_rk45 };

struct IntegratorConfig {
    double step = 0.01;  // base step (fixed_rk4) / initial step (rk45)
    double tol = 1e-11;  // local error tolerance (rk45)
    StepMethod method = StepMethod::adaptive_rk45;
    // Re-project the state onto the quadratic invariants after each
    // accepted step. Off by default: conservation is a test signal.
    bool renormalize = false;
    // Reduce |u| > 2K into (-2K, 2K] via the 4K periodicity before
    // integrating. Turn off to integrate long raw trajectories.
    bool reduce_period = true;
};

// Right side of the triplet at the given state. The public entry point
// requires the state to satisfy the quadratic invariants within 1e-6.
std::array<double, 3> vector_field(const JacobiTriple& state);

// Called with the state after every accepted step.
using StepObserver = std::function<void(const JacobiTriple&)>;

// Integrates the triplet from u = 0 to the requested argument.
// Throws ModulusOutOfRange unless 0 <= kappa < 1, StepFailure if the
// adaptive controller underflows. Negative u integrates with reversed
// steps.
JacobiTriple integrate(double u, double kappa, const IntegratorConfig& cfg = {},
                       const StepObserver& observer = nullptr);

// Standard-sign accessors: sn = f2, cn = -f3, dn = -f1.
double sn(double u, double kappa, const IntegratorConfig& cfg = {});
double cn(double u, double kappa, const IntegratorConfig& cfg = {});
double dn(double u, double kappa, const IntegratorConfig& cfg = {});

// Coefficients of the Casimir as a differential operator
//   c2 d^2/du^2 + c1 d/du,
// computed from the generator expansion
//   c2 = f1^2 - f2^2 - (1-kappa^2) f3^2
//   c1 = f1 f1' - f2 f2' - (1-kappa^2) f3 f3'
// and cross-checked against the closed forms kappa^2 (cn^2 - sn^2) and
// -2 kappa^2 sn cn dn; the two routes must agree within 1e-9 (Error
// otherwise). Returns the closed forms.
struct CasimirCoefficients {
    double c2 = 0.0;
    double c1 = 0.0;
};
CasimirCoefficients differential_casimir_coefficients(double u, double kappa,
                                                      const IntegratorConfig& cfg = {});

// Hyperbolic limit kappa = 1, excluded from the primary API: returns
// (sn, cn, dn) = (tanh u, sech u, sech u).
std::array<double, 3> limit_kappa1(double u);

} // namespace jacobilie
