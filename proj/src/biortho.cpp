#include "jacobilie/biortho.hpp"

#include <cmath>

namespace jacobilie {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Levi-Civita symbol on {1,2,3}.
int epsilon(int j, int k, int l) {
    if (j == k || k == l || j == l) {
        return 0;
    }
    return ((k - j + 3) % 3 == 1) ? 1 : -1;
}

} // namespace

const Mat2C& GeneratorTriple::t(int m) const {
    switch (m) {
        case 1: return t1;
        case 2: return t2;
        default: return t3;
    }
}

Complex alpha_coefficient(int m, int j, int k) {
    const double off = (j == k) ? 0.0 : 1.0;
    const double diag = (j == k) ? 1.0 : 0.0;
    const double sign = (j == 1) ? 1.0 : -1.0;
    switch (m) {
        case 1: return Complex{0.0, -off};
        case 2: return Complex{sign * diag, 0.0};
        default: return Complex{0.0, sign * off};
    }
}

AlphaCoefficients AlphaCoefficients::table() {
    AlphaCoefficients t;
    for (int m = 1; m <= 3; ++m) {
        for (int j = 1; j <= 2; ++j) {
            for (int k = 1; k <= 2; ++k) {
                t.alpha[m - 1][j - 1][k - 1] = alpha_coefficient(m, j, k);
            }
        }
    }
    return t;
}

Mat2C transform_matrix(double theta, double phi_angle) {
    const double ch = std::cos(0.5 * theta);
    const double sh = std::sin(0.5 * theta);
    const Complex phase = std::polar(1.0, 0.5 * phi_angle);
    return {Complex{ch, 0.0}, sh * phase, sh * std::conj(phase), Complex{ch, 0.0}};
}

BiorthoSystem build_biortho(double theta, double tol_degenerate) {
    const double omega = std::cos(theta);
    if (!(std::abs(omega) > tol_degenerate)) {
        throw DegenerateSystem("build_biortho: |cos(theta)| <= tolerance, "
                               "bi-orthogonality fails at |gamma| = 1");
    }
    BiorthoSystem sys;
    sys.theta = theta;
    sys.phi_angle = kDefaultPhiAngle;
    sys.omega = omega;
    sys.gamma = std::sin(theta);
    sys.v[0] = {Complex{kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}};
    sys.v[1] = {Complex{kInvSqrt2, 0.0}, Complex{-kInvSqrt2, 0.0}};

    const Mat2C t = transform_matrix(theta, sys.phi_angle);
    for (int j = 1; j <= 2; ++j) {
        sys.phi[j - 1] = matvec(t, sys.v[j - 1]);
        // chi_j = 2^{-1/2} (e^{i(3/2-j)theta}, (-1)^(j-1) e^{-i(3/2-j)theta})
        const double half = (1.5 - j) * theta;
        const Complex up = std::polar(kInvSqrt2, half);
        const double sign = (j == 1) ? 1.0 : -1.0;
        sys.chi[j - 1] = {up, sign * std::conj(up)};
    }
    return sys;
}

std::array<Vec2C, 2> strict_dual(const BiorthoSystem& sys) {
    const Mat2C t = transform_matrix(sys.theta, sys.phi_angle);
    const Mat2C dual_map = dagger(inverse(t));
    return {matvec(dual_map, sys.v[0]), matvec(dual_map, sys.v[1])};
}

GeneratorTriple build_generators(const BiorthoSystem& sys) {
    if (!(std::abs(sys.omega) > kDegenerateTol)) {
        throw DegenerateSystem("build_generators: omega ~ 0, the m = 3 "
                               "term divides by cos(theta)");
    }
    GeneratorTriple g;
    g.gamma = sys.gamma;
    for (int m = 1; m <= 3; ++m) {
        Mat2C sum{};
        const double divisor = (m == 3) ? sys.omega : 1.0;
        for (int j = 1; j <= 2; ++j) {
            for (int k = 1; k <= 2; ++k) {
                const Complex coeff = alpha_coefficient(m, j, k) / divisor;
                sum = add(sum, scale(coeff, outer(sys.phi[j - 1], sys.chi[k - 1])));
            }
        }
        Mat2C& target = (m == 1) ? g.t1 : (m == 2) ? g.t2 : g.t3;
        target = scale(Complex{0.5, 0.0}, sum);
    }
    return g;
}

GeneratorTriple explicit_generators(double gamma) {
    if (!(std::abs(gamma) <= 1.0)) {
        throw OutOfRange("explicit_generators: |gamma| must be <= 1");
    }
    const Complex i{0.0, 1.0};
    GeneratorTriple g;
    g.gamma = gamma;
    g.t1 = scale(0.5, Mat2C{-i, Complex{gamma, 0.0}, Complex{gamma, 0.0}, i});
    g.t2 = scale(0.5, Mat2C{-i * gamma, Complex{1.0, 0.0}, Complex{1.0, 0.0}, i * gamma});
    g.t3 = scale(0.5, Mat2C{Complex{0.0, 0.0}, -i, i, Complex{0.0, 0.0}});
    return g;
}

StructureReport verify_structure_constants(const GeneratorTriple& g, double tol) {
    StructureReport report;
    report.gamma = g.gamma;
    const double gamma2 = g.gamma * g.gamma;
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
            if (j == k) {
                continue;
            }
            StructureReport::PairCheck check;
            check.j = j;
            check.k = k;
            Mat2C predicted{};
            for (int l = 1; l <= 3; ++l) {
                const double sign = (l == 1) ? -1.0 : 1.0;
                const double deform = (l == 3) ? (1.0 - gamma2) : 1.0;
                const double coeff = sign * deform * epsilon(j, k, l) + 0.0; // no -0.0

                check.predicted_coeffs[l - 1] = coeff;
                predicted = add(predicted, scale(coeff, g.t(l)));
            }
            check.residual = mat_norm(sub(commutator(g.t(j), g.t(k)), predicted));
            report.max_residual = std::max(report.max_residual, check.residual);
            report.pairs.push_back(check);
        }
    }
    report.pass = report.max_residual <= tol;
    return report;
}

Mat2C matrix_casimir(const GeneratorTriple& g) {
    const double gamma2 = g.gamma * g.gamma;
    return sub(sub(matmul(g.t1, g.t1), matmul(g.t2, g.t2)),
               scale(1.0 - gamma2, matmul(g.t3, g.t3)));
}

void to_json(nlohmann::json& out, const StructureReport& report) {
    out = nlohmann::json{{"gamma", report.gamma},
                         {"pairs", nlohmann::json::array()},
                         {"max_residual", report.max_residual},
                         {"pass", report.pass}};
    for (const auto& pair : report.pairs) {
        out["pairs"].push_back({{"j", pair.j},
                                {"k", pair.k},
                                {"predicted_coeffs", pair.predicted_coeffs},
                                {"residual", pair.residual}});
    }
}

} // namespace jacobilie
