#pragma once

// Integral route: incomplete elliptic integrals of the first kind by
// adaptive Gauss-Kronrod quadrature, and sn as the inverse of its
// integral by bracketed root-finding. Endpoint square-root
// singularities are removed analytically by trigonometric substitution
// before any quadrature runs; every integral here reduces to
//
//   int_0^phi dt / sqrt(1 - kappa^2 sin^2 t)
//
// whose integrand is smooth on the whole range for kappa < 1.

#include <cmath>
#include <cstdlib>

#include "jacobilie/errors.hpp"

namespace jacobilie {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 30;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0; // estimate, QUADPACK-style (200|G7-K15|)^1.5
};

namespace detail {

// G7-K15 nodes and weights (QUADPACK dqk15).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <class F>
QuadratureResult kronrod15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double gauss = kGaussWeights[3] * f0;
    double kron = kKronrodWeights[7] * f0;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double fs = f(mid + dx) + f(mid - dx);
        kron += kKronrodWeights[i] * fs;
        if (i % 2 == 1) {
            gauss += kGaussWeights[i / 2] * fs;
        }
    }
    QuadratureResult r;
    r.value = kron * half;
    const double diff = std::abs((kron - gauss) * half);
    r.error = std::pow(200.0 * diff, 1.5);
    if (r.error > diff) {
        r.error = diff; // estimate never exceeds the raw difference scale
    }
    r.error = std::max(r.error, std::abs(r.value) * 1e-17);
    return r;
}

template <class F>
QuadratureResult adapt(const F& f, double a, double b, double tol, int depth, int max_depth) {
    QuadratureResult whole = kronrod15(f, a, b);
    if (whole.error <= tol || depth >= max_depth) {
        return whole;
    }
    const double mid = 0.5 * (a + b);
    QuadratureResult left = adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth);
    QuadratureResult right = adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth);
    return {left.value + right.value, left.error + right.error};
}

} // namespace detail

// Adaptive bisection with a 15-point Kronrod rule per panel. Refinement
// stops once the panel estimate meets max(abs_tol, rel_tol*|whole|)
// split across panels, or at max_depth.
template <class F>
QuadratureResult adaptive_quadrature(const F& f, double a, double b,
                                     const QuadratureConfig& cfg = {}) {
    const QuadratureResult first = detail::kronrod15(f, a, b);
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first.value));
    if (first.error <= tol) {
        return first;
    }
    return detail::adapt(f, a, b, tol, 0, cfg.max_depth);
}

// sn^{-1}: int_0^x dt / sqrt((1-t^2)(1-kappa^2 t^2)), evaluated after
// the substitution t = sin(theta). Odd and strictly increasing in x.
// DomainError for |x| > 1 or kappa outside [0, 1).
double asn(double x, double kappa, const QuadratureConfig& cfg = {});

// cn^{-1}: int_x^1 dt / sqrt((1-t^2)(1-kappa^2+kappa^2 t^2)) via
// t = cos(theta); inverse of cn on the branch u in [0, 2K].
double acn(double x, double kappa, const QuadratureConfig& cfg = {});

// Which integrand the dn inversion uses. `standard` integrates
// int_x^1 dt / sqrt((1-t^2)(t^2-(1-kappa^2))), the actual inverse of
// dn. `plus_modulus` integrates (1-t^2)(1+kappa^2 t^2) instead; it is
// NOT the inverse of dn and exists so the difference between the two
// forms can be computed rather than guessed at.
enum class DnIntegrand { standard, plus_modulus };

// dn^{-1} on u in [0, K]. DomainError outside [sqrt(1-kappa^2), 1] or
// kappa outside (0, 1) (dn is constant at kappa = 0).
double adn(double x, double kappa, const QuadratureConfig& cfg = {},
           DnIntegrand form = DnIntegrand::standard);

// Quarter period K(kappa) = asn(1, kappa). DomainError for kappa
// outside [0, 1); the integral diverges logarithmically at kappa = 1.
double complete_K(double kappa, const QuadratureConfig& cfg = {});

// Inverse of asn by bisection-seeded secant on [0, 1]: returns x with
// asn(x, kappa) = u. This is the integral-route construction of
// sn(u, kappa) for u in [0, K], independent of the ODE route.
// DomainError for u outside [0, K].
double invert_asn(double u, double kappa, const QuadratureConfig& cfg = {});

} // namespace jacobilie
