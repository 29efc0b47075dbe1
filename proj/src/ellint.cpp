#include "jacobilie/ellint.hpp"

#include <algorithm>

namespace jacobilie {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_modulus(double kappa) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw DomainError("elliptic integral: kappa must satisfy 0 <= kappa < 1");
    }
}

// int_0^phi dt / sqrt(1 - kappa^2 sin^2 t); the common regularized form
// every integral below reduces to. Smooth on all of R for kappa < 1.
double legendre_F(double phi, double kappa, const QuadratureConfig& cfg) {
    const double m = kappa * kappa;
    const auto integrand = [m](double t) {
        const double s = std::sin(t);
        return 1.0 / std::sqrt(1.0 - m * s * s);
    };
    return adaptive_quadrature(integrand, 0.0, phi, cfg).value;
}

} // namespace

double asn(double x, double kappa, const QuadratureConfig& cfg) {
    require_modulus(kappa);
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("asn: |x| must be <= 1");
    }
    return legendre_F(std::asin(x), kappa, cfg);
}

double acn(double x, double kappa, const QuadratureConfig& cfg) {
    require_modulus(kappa);
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("acn: |x| must be <= 1");
    }
    // t = cos(theta) turns int_x^1 [(1-t^2)(1-kappa^2+kappa^2 t^2)]^{-1/2}
    // into the regularized form on [0, arccos x].
    return legendre_F(std::acos(x), kappa, cfg);
}

double adn(double x, double kappa, const QuadratureConfig& cfg, DnIntegrand form) {
    if (form == DnIntegrand::plus_modulus) {
        // Literal integrand int_x^1 [(1-t^2)(1+kappa^2 t^2)]^{-1/2} dt,
        // regularized by t = sin(theta). Not an inverse of dn.
        if (!(kappa >= 0.0 && kappa < 1.0)) {
            throw DomainError("adn: kappa must satisfy 0 <= kappa < 1");
        }
        if (!(std::abs(x) <= 1.0)) {
            throw DomainError("adn: |x| must be <= 1");
        }
        const double m = kappa * kappa;
        const auto integrand = [m](double t) {
            const double s = std::sin(t);
            return 1.0 / std::sqrt(1.0 + m * s * s);
        };
        return adaptive_quadrature(integrand, std::asin(x), 0.5 * kPi, cfg).value;
    }
    if (!(kappa > 0.0 && kappa < 1.0)) {
        throw DomainError("adn: kappa must satisfy 0 < kappa < 1");
    }
    const double kp = std::sqrt(1.0 - kappa * kappa);
    if (!(x >= kp && x <= 1.0)) {
        throw DomainError("adn: x must lie in [sqrt(1-kappa^2), 1]");
    }
    // int_x^1 [(1-t^2)(t^2-(1-kappa^2))]^{-1/2} dt; the substitution
    // t^2 = 1 - kappa^2 sin^2(theta) removes both endpoint
    // singularities and leaves the regularized form on
    // [0, arcsin(sqrt(1-x^2)/kappa)].
    const double s = std::min(1.0, std::sqrt((1.0 - x) * (1.0 + x)) / kappa);
    return legendre_F(std::asin(s), kappa, cfg);
}

double complete_K(double kappa, const QuadratureConfig& cfg) {
    require_modulus(kappa);
    return legendre_F(0.5 * kPi, kappa, cfg);
}

double invert_asn(double u, double kappa, const QuadratureConfig& cfg) {
    require_modulus(kappa);
    const double quarter = complete_K(kappa, cfg);
    if (!(u >= 0.0 && u <= quarter)) {
        throw DomainError("invert_asn: u must lie in [0, K(kappa)]");
    }
    if (u == 0.0) {
        return 0.0;
    }
    // asn is strictly increasing with slope >= 1, so the root of
    // asn(x) - u on [0, 1] is simple. Bisection narrows the bracket,
    // secant polishes inside it.
    double lo = 0.0, hi = 1.0;
    double flo = -u, fhi = quarter - u;
    if (fhi == 0.0) {
        return 1.0;
    }
    for (int i = 0; i < 12; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = asn(mid, kappa, cfg) - u;
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
    for (int i = 0; i < 60; ++i) {
        if (f1 == f0) {
            break;
        }
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo && x2 < hi)) {
            x2 = 0.5 * (lo + hi); // fall back into the bracket
        }
        const double f2 = asn(x2, kappa, cfg) - u;
        if ((f2 < 0.0) == (flo < 0.0)) {
            lo = x2;
            flo = f2;
        } else {
            hi = x2;
            fhi = f2;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
        // slope >= 1 everywhere, so |f| bounds the x error
        if (std::abs(f1) < 1e-13 || hi - lo < 1e-15) {
            break;
        }
    }
    return x1;
}

} // namespace jacobilie
