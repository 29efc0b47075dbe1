#include "jacobilie/jacobiode.hpp"

#include <algorithm>
#include <cmath>

#include "jacobilie/ellint.hpp"

namespace jacobilie {

namespace {

struct State {
    double f1, f2, f3;
};

inline State rhs(const State& s, double kappa2) {
    // df1 = -kappa^2 f2 f3, df2 = +f1 f3, df3 = -f1 f2; the sign
    // pattern is forced by K1^2 = kappa^2, K2^2 = -1, K3^2 = 1.
    return {-kappa2 * s.f2 * s.f3, s.f1 * s.f3, -s.f1 * s.f2};
}

inline State axpy(const State& y, double h, const State& k) {
    return {y.f1 + h * k.f1, y.f2 + h * k.f2, y.f3 + h * k.f3};
}

void renormalize(State& s, double kappa2) {
    const double n = std::hypot(s.f2, s.f3);
    if (n > 0.0) {
        s.f2 /= n;
        s.f3 /= n;
    }
    s.f1 = std::copysign(std::sqrt(std::max(0.0, 1.0 - kappa2 * s.f2 * s.f2)), s.f1);
}

// Dormand-Prince 5(4), FSAL. Error estimate is the 5th/4th difference.
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

void integrate_rk45(State& y, double target, double kappa2, const IntegratorConfig& cfg,
                    double kappa, const StepObserver& observer) {
    const double dir = (target >= 0.0) ? 1.0 : -1.0;
    const double hmin = 1e-14 * std::max(1.0, std::abs(target));
    double u = 0.0;
    double h = dir * std::min(std::abs(cfg.step), std::abs(target));
    State k1 = rhs(y, kappa2);
    while (dir * (target - u) > 0.0) {
        if ((u + h - target) * dir > 0.0) {
            h = target - u;
        }
        const State k2 = rhs(axpy(y, h * a21, k1), kappa2);
        State s = y;
        s = axpy(s, h * a31, k1);
        s = axpy(s, h * a32, k2);
        const State k3 = rhs(s, kappa2);
        s = axpy(axpy(axpy(y, h * a41, k1), h * a42, k2), h * a43, k3);
        const State k4 = rhs(s, kappa2);
        s = axpy(axpy(axpy(axpy(y, h * a51, k1), h * a52, k2), h * a53, k3), h * a54, k4);
        const State k5 = rhs(s, kappa2);
        s = axpy(axpy(axpy(axpy(axpy(y, h * a61, k1), h * a62, k2), h * a63, k3), h * a64, k4),
                 h * a65, k5);
        const State k6 = rhs(s, kappa2);
        State y5 = y;
        y5 = axpy(y5, h * b1, k1);
        y5 = axpy(y5, h * b3, k3);
        y5 = axpy(y5, h * b4, k4);
        y5 = axpy(y5, h * b5, k5);
        y5 = axpy(y5, h * b6, k6);
        const State k7 = rhs(y5, kappa2);

        const double err =
            std::abs(h) *
            std::max({std::abs(e1 * k1.f1 + e3 * k3.f1 + e4 * k4.f1 + e5 * k5.f1 + e6 * k6.f1 +
                               e7 * k7.f1),
                      std::abs(e1 * k1.f2 + e3 * k3.f2 + e4 * k4.f2 + e5 * k5.f2 + e6 * k6.f2 +
                               e7 * k7.f2),
                      std::abs(e1 * k1.f3 + e3 * k3.f3 + e4 * k4.f3 + e5 * k5.f3 + e6 * k6.f3 +
                               e7 * k7.f3)});

        if (err <= cfg.tol) {
            u += h;
            y = y5;
            k1 = k7; // FSAL
            if (cfg.renormalize) {
                renormalize(y, kappa2);
                k1 = rhs(y, kappa2);
            }
            if (observer) {
                observer({u, kappa, y.f1, y.f2, y.f3});
            }
        }
        const double safety =
            0.9 * std::pow(cfg.tol / std::max(err, 1e-300), 0.2);
        h *= std::clamp(safety, 0.2, 5.0);
        if (std::abs(h) < hmin && dir * (target - u) > 0.0) {
            throw StepFailure("integrate: adaptive step underflow");
        }
    }
}

void integrate_rk4(State& y, double target, double kappa2, const IntegratorConfig& cfg,
                   double kappa, const StepObserver& observer) {
    const long n = std::max(1L, std::lround(std::ceil(std::abs(target) / cfg.step)));
    const double h = target / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
        const State k1 = rhs(y, kappa2);
        const State k2 = rhs(axpy(y, 0.5 * h, k1), kappa2);
        const State k3 = rhs(axpy(y, 0.5 * h, k2), kappa2);
        const State k4 = rhs(axpy(y, h, k3), kappa2);
        y = {y.f1 + h / 6.0 * (k1.f1 + 2.0 * k2.f1 + 2.0 * k3.f1 + k4.f1),
             y.f2 + h / 6.0 * (k1.f2 + 2.0 * k2.f2 + 2.0 * k3.f2 + k4.f2),
             y.f3 + h / 6.0 * (k1.f3 + 2.0 * k2.f3 + 2.0 * k3.f3 + k4.f3)};
        if (cfg.renormalize) {
            renormalize(y, kappa2);
        }
        if (observer) {
            observer({static_cast<double>(i + 1) * h, kappa, y.f1, y.f2, y.f3});
        }
    }
}

} // namespace

std::array<double, 3> vector_field(const JacobiTriple& state) {
    const double kappa2 = state.kappa * state.kappa;
    const double circle = state.f2 * state.f2 + state.f3 * state.f3 - 1.0;
    const double band = state.f1 * state.f1 + kappa2 * state.f2 * state.f2 - 1.0;
    if (!(std::abs(circle) <= 1e-6) || !(std::abs(band) <= 1e-6)) {
        throw DomainError("vector_field: state violates the quadratic invariants");
    }
    const State d = rhs({state.f1, state.f2, state.f3}, kappa2);
    return {d.f1, d.f2, d.f3};
}

JacobiTriple integrate(double u, double kappa, const IntegratorConfig& cfg,
                       const StepObserver& observer) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw ModulusOutOfRange("integrate: kappa must satisfy 0 <= kappa < 1");
    }
    if (!std::isfinite(u)) {
        throw DomainError("integrate: u must be finite");
    }
    double target = u;
    if (cfg.reduce_period && std::abs(u) > 3.141592653589793) {
        // Period 4K; remainder() lands the target in (-2K, 2K].
        const double quarter = complete_K(kappa);
        if (std::abs(u) > 2.0 * quarter) {
            target = std::remainder(u, 4.0 * quarter);
        }
    }
    State y{-1.0, 0.0, -1.0};
    const double kappa2 = kappa * kappa;
    if (target != 0.0) {
        if (cfg.method == StepMethod::adaptive_rk45) {
            integrate_rk45(y, target, kappa2, cfg, kappa, observer);
        } else {
            integrate_rk4(y, target, kappa2, cfg, kappa, observer);
        }
    }
    return {u, kappa, y.f1, y.f2, y.f3};
}

double sn(double u, double kappa, const IntegratorConfig& cfg) {
    return integrate(u, kappa, cfg).f2;
}

double cn(double u, double kappa, const IntegratorConfig& cfg) {
    return -integrate(u, kappa, cfg).f3;
}

double dn(double u, double kappa, const IntegratorConfig& cfg) {
    return -integrate(u, kappa, cfg).f1;
}

CasimirCoefficients differential_casimir_coefficients(double u, double kappa,
                                                      const IntegratorConfig& cfg) {
    const JacobiTriple state = integrate(u, kappa, cfg);
    const auto d = vector_field(state);
    const double kappa2 = kappa * kappa;
    const double one_m_k2 = 1.0 - kappa2;

    // Generator-expansion route.
    const double c2_fields = state.f1 * state.f1 - state.f2 * state.f2 -
                             one_m_k2 * state.f3 * state.f3;
    const double c1_fields =
        state.f1 * d[0] - state.f2 * d[1] - one_m_k2 * state.f3 * d[2];

    // Closed forms in sn, cn, dn.
    const double sn_v = state.f2;
    const double cn_v = -state.f3;
    const double dn_v = -state.f1;
    const double c2 = kappa2 * (cn_v * cn_v - sn_v * sn_v);
    const double c1 = -2.0 * kappa2 * sn_v * cn_v * dn_v;

    if (!(std::abs(c2_fields - c2) <= 1e-9) || !(std::abs(c1_fields - c1) <= 1e-9)) {
        throw Error("differential_casimir_coefficients: generator-expansion and "
                    "closed-form coefficients disagree beyond 1e-9");
    }
    return {c2, c1};
}

std::array<double, 3> limit_kappa1(double u) {
    const double sech = 1.0 / std::cosh(u);
    return {std::tanh(u), sech, sech};
}

} // namespace jacobilie
