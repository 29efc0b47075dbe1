// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Invoked as: acceptance <path-to-jacobi-lie>

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jacobilie/biortho.hpp"
#include "jacobilie/ellint.hpp"
#include "jacobilie/grid.hpp"
#include "jacobilie/jacobiode.hpp"
#include "jacobilie/oracle.hpp"

#include "process_util.hpp"

namespace {

using namespace jacobilie;

std::string cli_binary;

const std::vector<double> kGammaGrid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                     0.6, 0.7, 0.8, 0.9, 0.99};

double two_route_gap(double theta) {
    const GeneratorTriple built = build_generators(build_biortho(theta));
    const GeneratorTriple ref = explicit_generators(std::sin(theta));
    double gap = 0.0;
    for (int m = 1; m <= 3; ++m) {
        gap = std::max(gap, mat_norm(sub(built.t(m), ref.t(m))));
    }
    return gap;
}

// 1. operator-sum generators equal the explicit matrices, 1e-12
bool generator_reconstruction(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double theta = 1.47 * i / 49.0;
        worst = std::max(worst, two_route_gap(theta));
    }
    std::ostringstream msg;
    msg << "max entrywise gap " << worst;
    detail = msg.str();
    return worst < 1e-12;
}

// 2. structure constants on the gamma grid, 1e-12; undeformed table at
//    gamma = 0; collapsed [t1,t2] channel at gamma = 1
bool structure_constants(std::string& detail) {
    double worst = 0.0;
    for (double gamma : kGammaGrid) {
        const StructureReport report =
            verify_structure_constants(explicit_generators(gamma), 1e-12);
        worst = std::max(worst, report.max_residual);
        if (!report.pass) {
            detail = "residual above 1e-12 at gamma = " + std::to_string(gamma);
            return false;
        }
    }
    const GeneratorTriple flat = explicit_generators(0.0);
    const double undeformed =
        std::max({mat_norm(sub(commutator(flat.t1, flat.t2), flat.t3)),
                  mat_norm(add(commutator(flat.t2, flat.t3), flat.t1)),
                  mat_norm(sub(commutator(flat.t3, flat.t1), flat.t2))});
    const GeneratorTriple collapsed = explicit_generators(1.0);
    const StructureReport degenerate = verify_structure_constants(collapsed, 1e-12);
    double channel_coeff = 1.0;
    for (const auto& pair : degenerate.pairs) {
        if (pair.j == 1 && pair.k == 2) {
            channel_coeff = std::abs(pair.predicted_coeffs[2]);
        }
    }
    const double commutator_norm = mat_norm(commutator(collapsed.t1, collapsed.t2));
    std::ostringstream msg;
    msg << "max residual " << worst << ", undeformed table gap " << undeformed
        << ", gamma=1 channel coeff " << channel_coeff;
    detail = msg.str();
    return worst < 1e-12 && undeformed < 1e-12 && channel_coeff < 1e-12 &&
           commutator_norm < 1e-12;
}

// 3. casimir proportional to -(3/4)(1-g^2) identity and central, 1e-12
bool matrix_casimir_criterion(std::string& detail) {
    double worst = 0.0;
    for (double gamma : kGammaGrid) {
        const GeneratorTriple g = explicit_generators(gamma);
        const Mat2C casimir = matrix_casimir(g);
        const double expected = -0.75 * (1.0 - gamma * gamma);
        worst = std::max(worst, mat_norm(sub(casimir, scale(expected, identity()))));
        for (int m = 1; m <= 3; ++m) {
            worst = std::max(worst, mat_norm(commutator(casimir, g.t(m))));
        }
    }
    std::ostringstream msg;
    msg << "max deviation " << worst;
    detail = msg.str();
    return worst < 1e-12;
}

// 4. trigonometric limit at kappa = 0 over 100 points in [0, 2pi], 1e-9
bool trigonometric_limit(std::string& detail) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double u = 2.0 * M_PI * i / 99.0;
        const JacobiTriple s = integrate(u, 0.0);
        worst = std::max({worst, std::abs(s.f2 - std::sin(u)),
                          std::abs(-s.f3 - std::cos(u)), std::abs(-s.f1 - 1.0)});
    }
    std::ostringstream msg;
    msg << "max deviation from sin/cos/1: " << worst;
    detail = msg.str();
    return worst < 1e-9;
}

// 5. pairwise three-route agreement on 50 x 5 grid, 1e-8
bool three_route_consistency(std::string& detail) {
    double worst = 0.0;
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double quarter = complete_K(kappa);
        std::vector<double> u_values;
        for (int i = 0; i < 50; ++i) {
            u_values.push_back(quarter * (i + 0.5) / 50.0);
        }
        const std::vector<double> kappas{kappa};
        const auto records =
            evaluate_grid(u_values, kappas, Route::all, Execution::parallel);
        for (const auto& rec : records) {
            worst = std::max(worst, rec.max_route_disagreement);
        }
    }
    std::ostringstream msg;
    msg << "max pairwise disagreement " << worst;
    detail = msg.str();
    return worst < 1e-8;
}

// 6. quadratic invariants along trajectories to 8K, 1e-9
bool conservation(std::string& detail) {
    double worst = 0.0;
    IntegratorConfig cfg;
    cfg.reduce_period = false;
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double kappa2 = kappa * kappa;
        integrate(8.0 * complete_K(kappa), kappa, cfg, [&](const JacobiTriple& s) {
            worst = std::max(worst, std::abs(s.f2 * s.f2 + s.f3 * s.f3 - 1.0));
            worst =
                std::max(worst, std::abs(s.f1 * s.f1 + kappa2 * s.f2 * s.f2 - 1.0));
        });
    }
    std::ostringstream msg;
    msg << "max invariant drift " << worst;
    detail = msg.str();
    return worst < 1e-9;
}

// 7. sn(K) = 1, cn(K) = 0, dn(K) = sqrt(1-k^2) at 1e-8; quadrature and
//    AGM quarter periods within 1e-10
bool quarter_period(std::string& detail) {
    double worst_value = 0.0;
    double worst_K = 0.0;
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double quarter = complete_K(kappa);
        worst_K = std::max(worst_K, std::abs(quarter - complete_K_agm(kappa)));
        const JacobiTriple s = integrate(quarter, kappa);
        const double kp = std::sqrt(1.0 - kappa * kappa);
        worst_value = std::max({worst_value, std::abs(s.f2 - 1.0), std::abs(s.f3),
                                std::abs(-s.f1 - kp)});
    }
    std::ostringstream msg;
    msg << "max value deviation " << worst_value << ", max K route gap " << worst_K;
    detail = msg.str();
    return worst_value < 1e-8 && worst_K < 1e-10;
}

// 8. differential casimir coefficients, both routes, 1e-9 at 20 random points
bool differential_casimir(std::string& detail) {
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> u_dist(0.0, 5.0);
    std::uniform_real_distribution<double> k_dist(0.0, 0.95);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double u = u_dist(rng);
        const double kappa = k_dist(rng);
        const double kappa2 = kappa * kappa;
        const JacobiTriple s = integrate(u, kappa);
        const auto d = vector_field(s);
        const double c2_fields =
            s.f1 * s.f1 - s.f2 * s.f2 - (1.0 - kappa2) * s.f3 * s.f3;
        const double c1_fields =
            s.f1 * d[0] - s.f2 * d[1] - (1.0 - kappa2) * s.f3 * d[2];
        const double sn_v = s.f2, cn_v = -s.f3, dn_v = -s.f1;
        const double c2 = kappa2 * (cn_v * cn_v - sn_v * sn_v);
        const double c1 = -2.0 * kappa2 * sn_v * cn_v * dn_v;
        worst = std::max({worst, std::abs(c2_fields - c2), std::abs(c1_fields - c1)});
        const auto reported = differential_casimir_coefficients(u, kappa);
        worst = std::max({worst, std::abs(reported.c2 - c2), std::abs(reported.c1 - c1)});
    }
    std::ostringstream msg;
    msg << "max route gap " << worst;
    detail = msg.str();
    return worst < 1e-9;
}

// 9. finite-difference d(sn)/du vs sqrt(1-k^2 sn^2) sqrt(1-sn^2) on [0, K), 1e-6
bool first_order_compatibility(std::string& detail) {
    const double h = 1e-5;
    double worst = 0.0;
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double quarter = complete_K(kappa);
        for (int i = 0; i < 20; ++i) {
            const double u = h + (quarter - 3.0 * h) * i / 20.0;
            const double fd = (sn(u + h, kappa) - sn(u - h, kappa)) / (2.0 * h);
            const double s = sn(u, kappa);
            const double rhs =
                std::sqrt(1.0 - kappa * kappa * s * s) * std::sqrt(1.0 - s * s);
            worst = std::max(worst, std::abs(fd - rhs));
        }
    }
    std::ostringstream msg;
    msg << "max |fd - closed form| " << worst;
    detail = msg.str();
    return worst < 1e-6;
}

// 10. degeneracy errors: DegenerateSystem at |cos theta| <= 1e-9,
//     ModulusOutOfRange at kappa >= 1
bool degeneracy_handling(std::string& detail) {
    detail.clear();
    bool ok = true;
    const double right_angle = std::acos(0.0);
    for (double theta : {right_angle, right_angle + 5e-10, right_angle - 5e-10}) {
        try {
            build_biortho(theta);
            ok = false;
            detail += "build_biortho accepted a degenerate angle; ";
        } catch (const DegenerateSystem&) {
        }
    }
    for (double kappa : {1.0, 1.2, -0.3}) {
        try {
            integrate(0.5, kappa);
            ok = false;
            detail += "integrate accepted kappa out of range; ";
        } catch (const ModulusOutOfRange&) {
        }
    }
    try {
        build_biortho(0.3);
        integrate(0.5, 0.9);
    } catch (...) {
        ok = false;
        detail += "valid inputs were rejected; ";
    }
    if (ok) {
        detail = "all rejections and acceptances as specified";
    }
    return ok;
}

// 11. CLI: verify exits 0 on the default grid; a 10x3 CSV table is
//     byte-identical across runs
bool cli_contract(std::string& detail) {
    if (cli_binary.empty()) {
        detail = "no CLI binary path given";
        return false;
    }
    const auto verify = testutil::run_command(cli_binary + " verify > /dev/null 2>&1");
    if (verify.exit_code != 0) {
        detail = "verify exit code was not 0";
        return false;
    }
    const std::string table_cmd =
        cli_binary + " table --u-min 0 --u-max 0.9 --step 0.1 --kappa 0.2,0.5,0.8 2>/dev/null";
    const auto first = testutil::run_command(table_cmd);
    const auto second = testutil::run_command(table_cmd);
    if (first.exit_code != 0 || first.out.empty()) {
        detail = "table run failed";
        return false;
    }
    if (first.out != second.out) {
        detail = "table output differs between runs";
        return false;
    }
    std::size_t rows = 0;
    for (char c : first.out) {
        rows += (c == '\n');
    }
    if (rows != 31) {
        detail = "expected 31 lines, got " + std::to_string(rows);
        return false;
    }
    detail = "verify exit 0; 10x3 table byte-identical";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        cli_binary = argv[1];
    }

    struct Criterion {
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const Criterion criteria[] = {
        {"generator reconstruction (50 angles, 1e-12)", generator_reconstruction},
        {"structure constants (gamma grid, 1e-12)", structure_constants},
        {"matrix casimir (-(3/4)(1-g^2) I, central, 1e-12)", matrix_casimir_criterion},
        {"trigonometric limit (kappa = 0, 100 points, 1e-9)", trigonometric_limit},
        {"three-route consistency (50 x 5 grid, 1e-8)", three_route_consistency},
        {"invariant conservation (to 8K, 1e-9)", conservation},
        {"quarter-period identities (1e-8; K routes 1e-10)", quarter_period},
        {"differential casimir coefficients (20 random points, 1e-9)",
         differential_casimir},
        {"first-order compatibility (d(sn)/du, 1e-6)", first_order_compatibility},
        {"degeneracy handling (DegenerateSystem, ModulusOutOfRange)",
         degeneracy_handling},
        {"CLI contract (verify exit 0; deterministic 10x3 table)", cli_contract},
    };

    int failed = 0;
    int index = 0;
    for (const auto& criterion : criteria) {
        ++index;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, criterion.label,
                    detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) {
            ++failed;
        }
    }
    if (failed > 0) {
        std::printf("\n%d of %d criteria failed\n", failed, index);
        return 1;
    }
    std::printf("\nall %d criteria passed\n", index);
    return 0;
}
