#include "jacobilie/oracle.hpp"

#include <cmath>

namespace jacobilie {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRelTol = 1e-15;

} // namespace

std::vector<AgmState> agm_ladder(double a0, double b0) {
    if (!(a0 > 0.0) || !(b0 > 0.0)) {
        throw DomainError("agm: both arguments must be positive");
    }
    if (b0 > a0) {
        std::swap(a0, b0);
    }
    std::vector<AgmState> ladder;
    ladder.push_back({a0, b0, 0.5 * (a0 - b0), 0});
    while (ladder.back().c > kRelTol * ladder.back().a) {
        if (ladder.back().level >= kAgmMaxLevels) {
            throw ConvergenceFailure("agm: no convergence within the level cap");
        }
        const AgmState& prev = ladder.back();
        AgmState next;
        next.a = 0.5 * (prev.a + prev.b);
        next.b = std::sqrt(prev.a * prev.b);
        next.c = 0.5 * (prev.a - prev.b);
        next.level = prev.level + 1;
        ladder.push_back(next);
    }
    return ladder;
}

double agm(double a, double b) {
    const auto ladder = agm_ladder(a, b);
    const AgmState& last = ladder.back();
    return 0.5 * (last.a + last.b);
}

JacobiValues jacobi_agm(double u, double kappa) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw DomainError("jacobi_agm: kappa must satisfy 0 <= kappa < 1");
    }
    if (kappa == 0.0) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    // A&S 17.6: ladder for (1, kappa'), c_0 = kappa; seed the phase at
    // the deepest level and halve back down.
    const double kp = std::sqrt((1.0 - kappa) * (1.0 + kappa));
    auto ladder = agm_ladder(1.0, kp);
    ladder.front().c = kappa;

    const int deepest = static_cast<int>(ladder.size()) - 1;
    double phi = std::ldexp(ladder[deepest].a * u, deepest);
    for (int n = deepest; n >= 1; --n) {
        phi = 0.5 * (phi + std::asin(ladder[n].c / ladder[n].a * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(1.0 - kappa * kappa * sn * sn);
    return {sn, cn, dn};
}

double complete_K_agm(double kappa) {
    if (!(kappa >= 0.0 && kappa < 1.0)) {
        throw DomainError("complete_K_agm: kappa must satisfy 0 <= kappa < 1");
    }
    const double kp = std::sqrt((1.0 - kappa) * (1.0 + kappa));
    return 0.5 * kPi / agm(1.0, kp);
}

} // namespace jacobilie
