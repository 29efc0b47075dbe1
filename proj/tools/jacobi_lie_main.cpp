// jacobi-lie: evaluate and tabulate sn/cn/dn by three independent
// routes (ODE integration, integral inversion, AGM), verify the
// deformed so(2,1) generator algebra, and invert the elliptic
// integrals.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacobilie/biortho.hpp"
#include "jacobilie/ellint.hpp"
#include "jacobilie/grid.hpp"
#include "jacobilie/jacobiode.hpp"
#include "jacobilie/oracle.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// All numeric CLI output is fixed to 15 significant digits so golden
// files stay byte-stable.
std::string fmt15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

// Round through the 15-digit text form so JSON numbers match the CSV
// formatting contract.
json num15(double x) {
    return json(std::strtod(fmt15(x).c_str(), nullptr));
}

double default_tolerance() {
    if (const char* env = std::getenv("JACOBI_LIE_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0) {
            return v;
        }
    }
    return 1e-10;
}

json route_to_json(const jacobilie::RouteValues& v) {
    return json{{"sn", num15(v.sn)}, {"cn", num15(v.cn)}, {"dn", num15(v.dn)}};
}

json record_to_json(const jacobilie::OutputRecord& rec) {
    json out{{"u", num15(rec.u)}, {"kappa", num15(rec.kappa)}};
    if (rec.ode) out["ode"] = route_to_json(*rec.ode);
    if (rec.integral) out["integral"] = route_to_json(*rec.integral);
    if (rec.oracle) out["oracle"] = route_to_json(*rec.oracle);
    out["max_route_disagreement"] = num15(rec.max_route_disagreement);
    return out;
}

std::optional<jacobilie::Route> parse_route(const std::string& name) {
    if (name == "ode") return jacobilie::Route::ode;
    if (name == "integral") return jacobilie::Route::integral;
    if (name == "oracle") return jacobilie::Route::oracle;
    if (name == "all") return jacobilie::Route::all;
    return std::nullopt;
}

int cmd_verify(const std::vector<double>& gamma_grid, double tol, const std::string& json_path) {
    using namespace jacobilie;
    for (double g : gamma_grid) {
        if (!(g >= 0.0 && g <= 1.0)) {
            std::cerr << "verify: gamma values must lie in [0, 1], got " << fmt15(g) << "\n";
            return kExitUsage;
        }
    }

    json report;
    report["tol"] = tol;
    report["entries"] = json::array();
    bool all_pass = true;

    for (double g : gamma_grid) {
        json entry;
        entry["gamma"] = num15(g);
        const bool degenerate = std::abs(std::cos(std::asin(std::min(g, 1.0)))) <= kDegenerateTol;
        entry["degenerate"] = degenerate;
        entry["skipped"] = json::array();

        const GeneratorTriple explicit_triple = explicit_generators(g);
        const StructureReport structure = verify_structure_constants(explicit_triple, tol);
        json structure_json;
        to_json(structure_json, structure);
        entry["structure"] = structure_json;
        bool entry_pass = structure.pass;

        // Casimir must be -(3/4)(1-g^2) * identity and central.
        const Mat2C casimir = matrix_casimir(explicit_triple);
        const double expected = -0.75 * (1.0 - g * g);
        const Mat2C deviation = sub(casimir, scale(expected, identity()));
        double casimir_residual = mat_norm(deviation);
        for (int m = 1; m <= 3; ++m) {
            casimir_residual =
                std::max(casimir_residual, mat_norm(commutator(casimir, explicit_triple.t(m))));
        }
        entry["casimir_residual"] = num15(casimir_residual);
        entry_pass = entry_pass && casimir_residual <= tol;

        if (degenerate) {
            entry["skipped"].push_back(
                {{"check", "biorthogonality"},
                 {"reason", "bi-orthogonality fails at |gamma| = 1; omega = 0"}});
            entry["skipped"].push_back(
                {{"check", "two_route_generators"},
                 {"reason", "operator-sum route divides by omega = 0"}});
        } else {
            const double theta = std::asin(g);
            const BiorthoSystem sys = build_biortho(theta);
            // <phi_j|chi_k> = omega delta_jk
            double biortho_residual = 0.0;
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    const Complex expected_inner =
                        (j == k) ? Complex{sys.omega, 0.0} : Complex{0.0, 0.0};
                    biortho_residual = std::max(
                        biortho_residual, std::abs(inner(sys.phi[j], sys.chi[k]) - expected_inner));
                }
            }
            entry["biortho_residual"] = num15(biortho_residual);
            entry_pass = entry_pass && biortho_residual <= tol;

            const GeneratorTriple built = build_generators(sys);
            double two_route = 0.0;
            for (int m = 1; m <= 3; ++m) {
                two_route = std::max(two_route, mat_norm(sub(built.t(m), explicit_triple.t(m))));
            }
            entry["two_route_max_diff"] = num15(two_route);
            entry_pass = entry_pass && two_route <= tol;
        }

        entry["pass"] = entry_pass;
        all_pass = all_pass && entry_pass;
        report["entries"].push_back(entry);
    }

    report["pass"] = all_pass;
    const std::string dump = report.dump(2);
    if (json_path.empty() || json_path == "-") {
        std::cout << dump << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "verify: cannot open " << json_path << " for writing\n";
            return kExitUsage;
        }
        out << dump << "\n";
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_eval(double u, double kappa, const std::string& route_name) {
    const auto route = parse_route(route_name);
    if (!route) {
        std::cerr << "eval: unknown route '" << route_name << "'\n";
        return kExitUsage;
    }
    const auto rec = jacobilie::evaluate_point(u, kappa, *route);
    std::cout << record_to_json(rec).dump(2) << "\n";
    return kExitOk;
}

int cmd_table(double u_min, double u_max, double step, const std::vector<double>& kappas,
              const std::string& format) {
    if (!(step > 0.0)) {
        std::cerr << "table: step must be positive\n";
        return kExitUsage;
    }
    if (kappas.empty()) {
        std::cerr << "table: at least one kappa is required\n";
        return kExitUsage;
    }
    std::vector<double> u_values;
    for (double u = u_min; u <= u_max + 1e-12 * std::max(1.0, std::abs(u_max)); u += step) {
        u_values.push_back(u);
    }
    if (u_values.empty()) {
        std::cerr << "table: empty u range\n";
        return kExitUsage;
    }

    // Rows are independent; compute them in parallel, emit in order.
    const auto records = jacobilie::evaluate_grid(u_values, kappas, jacobilie::Route::all,
                                                  jacobilie::Execution::parallel);
    if (format == "csv") {
        std::string out = "u,kappa,sn,cn,dn,disagreement\n";
        for (const auto& rec : records) {
            out += fmt15(rec.u) + "," + fmt15(rec.kappa) + "," + fmt15(rec.ode->sn) + "," +
                   fmt15(rec.ode->cn) + "," + fmt15(rec.ode->dn) + "," +
                   fmt15(rec.max_route_disagreement) + "\n";
        }
        std::cout << out;
        return kExitOk;
    }
    if (format == "json") {
        json rows = json::array();
        for (const auto& rec : records) {
            rows.push_back(record_to_json(rec));
        }
        std::cout << rows.dump(2) << "\n";
        return kExitOk;
    }
    std::cerr << "table: unknown format '" << format << "'\n";
    return kExitUsage;
}

int cmd_invert(double x, double kappa, const std::string& which) {
    using namespace jacobilie;
    double u = 0.0;
    if (which == "sn") {
        u = asn(x, kappa);
    } else if (which == "cn") {
        u = acn(x, kappa);
    } else if (which == "dn") {
        u = adn(x, kappa);
    } else {
        std::cerr << "invert: --which must be sn, cn or dn\n";
        return kExitUsage;
    }
    std::cout << fmt15(u) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi elliptic functions from a deformed so(2,1) algebra"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "check generator algebra on a gamma grid");
    std::vector<double> gamma_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
    double tol = default_tolerance();
    std::string json_path;
    verify->add_option("--gamma", gamma_grid, "deformation parameters to check")
        ->delimiter(',');
    verify->add_option("--tol", tol, "residual tolerance (env JACOBI_LIE_TOL)");
    verify->add_option("--json", json_path, "write the JSON report here instead of stdout");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate sn/cn/dn at one point");
    double u = 0.0, kappa = 0.0, x = 0.0;
    std::string route_name = "all";
    eval->add_option("--u", u, "argument")->required();
    eval->add_option("--kappa", kappa, "modulus in [0, 1)");
    eval->add_option("--route", route_name, "ode | integral | oracle | all");

    // table
    auto* table = app.add_subcommand("table", "tabulate over a (u, kappa) grid");
    double u_min = 0.0, u_max = 0.0, step = 0.1;
    std::vector<double> kappas{0.0};
    std::string format = "csv";
    table->add_option("--u-min", u_min, "start of the u range");
    table->add_option("--u-max", u_max, "end of the u range")->required();
    table->add_option("--step", step, "u increment");
    table->add_option("--kappa", kappas, "comma-separated moduli")->delimiter(',');
    table->add_option("--format", format, "csv | json");

    // invert
    auto* invert = app.add_subcommand("invert", "inverse function value by integral");
    std::string which = "sn";
    invert->add_option("--x", x, "function value")->required();
    invert->add_option("--kappa", kappa, "modulus in [0, 1)");
    invert->add_option("--which", which, "sn | cn | dn");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(gamma_grid, tol, json_path);
        }
        if (eval->parsed()) {
            return cmd_eval(u, kappa, route_name);
        }
        if (table->parsed()) {
            return cmd_table(u_min, u_max, step, kappas, format);
        }
        if (invert->parsed()) {
            return cmd_invert(x, kappa, which);
        }
    } catch (const jacobilie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
