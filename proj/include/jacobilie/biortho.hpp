#pragma once

// Bi-orthogonal pair construction in C^2 and the deformed so(2,1)
// generator triple built from it, two independent ways: an outer-product
// sum over |phi_j><chi_k| and direct entrywise matrices. Their agreement
// is one of the library's cross-checks.

#include <array>
#include <vector>

#include "jacobilie/algebra2.hpp"

#include <json.hpp>

namespace jacobilie {

// The four vectors of the construction together with the angles and the
// derived parameters omega = cos(theta), gamma = sin(theta).
//
// phi_j = T v_j. The chi_j are NOT the strict duals (T^-1)^dagger v_j;
// they carry an extra factor cos(theta) so that <phi_j|chi_k> =
// omega * delta_jk. The generator formula's omega divisor is calibrated
// to this normalization. strict_dual() exposes the other convention.
struct BiorthoSystem {
    double theta = 0.0;
    double phi_angle = 0.0;
    double omega = 1.0; // cos(theta)
    double gamma = 0.0; // sin(theta)
    std::array<Vec2C, 2> v{};
    std::array<Vec2C, 2> phi{};
    std::array<Vec2C, 2> chi{};
};

// The three deformed so(2,1) generators. t3 is independent of gamma and
// equals (1/2)[[0,-i],[i,0]]; all three are traceless.
struct GeneratorTriple {
    Mat2C t1{};
    Mat2C t2{};
    Mat2C t3{};
    double gamma = 0.0;

    const Mat2C& t(int m) const; // m in {1,2,3}
};

// Coefficient table of the generator expansion,
//   alpha^(1)_jk = -i (1 - delta_jk)
//   alpha^(2)_jk = (-1)^(j-1) delta_jk
//   alpha^(3)_jk =  i (-1)^(j-1) (1 - delta_jk)
// with m in {1,2,3}, j,k in {1,2}.
Complex alpha_coefficient(int m, int j, int k);

struct AlphaCoefficients {
    // alpha[m-1][j-1][k-1]
    std::array<std::array<std::array<Complex, 2>, 2>, 3> alpha{};
    static AlphaCoefficients table();
};

// Residuals of the commutation relations
//   [t_j, t_k] = (-1)^(delta_l1) (1 - gamma^2 delta_l3) eps_jkl t_l
// for every ordered pair j != k. predicted_coeffs[l-1] is the
// coefficient on t_l of the predicted right side.
struct StructureReport {
    struct PairCheck {
        int j = 0;
        int k = 0;
        std::array<double, 3> predicted_coeffs{};
        double residual = 0.0;
    };
    double gamma = 0.0;
    std::vector<PairCheck> pairs;
    double max_residual = 0.0;
    bool pass = false;
};

void to_json(nlohmann::json& out, const StructureReport& report);

// Hermitian transform cos(theta/2) 1 + sin(theta/2) [[0, e^{i phi/2}],
// [e^{-i phi/2}, 0]]; determinant cos(theta). phi_angle = -pi is the
// choice under which T maps the base vectors onto the closed-form
// bi-orthogonal pair below.
Mat2C transform_matrix(double theta, double phi_angle);

constexpr double kDefaultPhiAngle = -3.14159265358979323846; // -pi
constexpr double kDegenerateTol = 1e-9;                      // on |cos(theta)|

// Builds the system from the orthonormal base pair
// v_j = 2^{-1/2} (1, (-1)^(j-1)):
//   phi_j = T(theta, -pi) v_j
//   chi_j = 2^{-1/2} (e^{i(3/2-j)theta}, (-1)^(j-1) e^{-i(3/2-j)theta})
// Throws DegenerateSystem when |cos(theta)| <= tol_degenerate; at that
// point bi-orthogonality fails and the algebra loses semi-simplicity.
BiorthoSystem build_biortho(double theta, double tol_degenerate = kDegenerateTol);

// Strict dual pair (T^-1)^dagger v_j, satisfying <phi_j|dual_k> = delta_jk.
std::array<Vec2C, 2> strict_dual(const BiorthoSystem& sys);

// Generator triple as the outer-product sum
//   t_m = (1/2) sum_jk alpha^(m)_jk / omega^(delta_m3) |phi_j><chi_k|.
// Matches explicit_generators(sin(theta)) entrywise.
GeneratorTriple build_generators(const BiorthoSystem& sys);

// Direct entrywise construction:
//   t1 = (1/2)[[-i, g],[g, i]], t2 = (1/2)[[-ig, 1],[1, ig]],
//   t3 = (1/2)[[0, -i],[i, 0]].
// Throws OutOfRange for |gamma| > 1. gamma = 0 is undeformed so(2,1).
GeneratorTriple explicit_generators(double gamma);

// Checks all six ordered commutators against the predicted right sides.
// Failures are reported, never thrown. At gamma = 1 the [t1,t2] channel
// coefficient (1 - gamma^2) vanishes.
StructureReport verify_structure_constants(const GeneratorTriple& g, double tol);

// t1^2 - t2^2 - (1 - gamma^2) t3^2 = -(3/4)(1 - gamma^2) 1; commutes
// with each generator.
Mat2C matrix_casimir(const GeneratorTriple& g);

} // namespace jacobilie
