#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "jacobilie/algebra2.hpp"
#include "jacobilie/biortho.hpp"

#include "test_util.hpp"

using namespace jacobilie;
using testutil::complex_close;
using testutil::mat_gap;

namespace {

const Complex kI{0.0, 1.0};

Mat2C half_pauli1() { return scale(0.5, Mat2C{0.0, 1.0, 1.0, 0.0}); }
Mat2C half_pauli2() { return scale(0.5, Mat2C{0.0, -kI, kI, 0.0}); }

} // namespace

TEST_CASE("inner product basics") {
    const Vec2C e1{1.0, 0.0};
    CHECK(complex_close(inner(e1, e1), 1.0, 1e-15));

    // orthonormal pair 2^{-1/2} (1, +-1)
    const double r = 1.0 / std::sqrt(2.0);
    const Vec2C v1{r, r};
    const Vec2C v2{r, -r};
    CHECK(complex_close(inner(v1, v2), 0.0, 1e-15));
    CHECK(complex_close(inner(v1, v1), 1.0, 1e-15));

    // conjugate-linear in the first slot
    const Vec2C iu{kI, 0.0};
    CHECK(complex_close(inner(iu, e1), -kI, 1e-15));
}

TEST_CASE("matmul") {
    testutil::MatrixGen gen;
    const Mat2C a = gen.matrix();
    CHECK(mat_gap(matmul(identity(), a), a) == 0.0);

    // halved Pauli product: sigma1 sigma2 = (1/4) diag(i, -i)
    const Mat2C p = matmul(half_pauli1(), half_pauli2());
    CHECK(complex_close(p.a11, 0.25 * kI, 1e-15));
    CHECK(complex_close(p.a22, -0.25 * kI, 1e-15));
    CHECK(complex_close(p.a12, 0.0, 1e-15));
    CHECK(complex_close(p.a21, 0.0, 1e-15));

    // inverse round trip through the transform matrix
    const Mat2C t = transform_matrix(1.1, -2.0);
    CHECK(mat_gap(matmul(t, inverse(t)), identity()) < 1e-12);
}

TEST_CASE("commutator") {
    testutil::MatrixGen gen;
    const Mat2C a = gen.matrix();
    CHECK(mat_norm(commutator(a, a)) == 0.0);
    CHECK(mat_norm(commutator(identity(), a)) == 0.0);

    // [t1, t2] = (1 - gamma^2) t3 at gamma = 0.5
    const GeneratorTriple g = explicit_generators(0.5);
    CHECK(mat_gap(commutator(g.t1, g.t2), scale(0.75, g.t3)) < 1e-15);
}

TEST_CASE("dagger and inverse") {
    testutil::MatrixGen gen;
    const Mat2C a = gen.matrix();
    CHECK(mat_gap(dagger(dagger(a)), a) == 0.0);

    // det T(theta) = cos(theta)
    const Mat2C t = transform_matrix(M_PI / 3.0, -M_PI);
    CHECK(std::abs(det(t) - Complex{0.5, 0.0}) < 1e-15);
    CHECK(is_invertible(t));
    CHECK_NOTHROW(inverse(t));

    const Mat2C t_degenerate = transform_matrix(M_PI / 2.0, -M_PI);
    CHECK_THROWS_AS(inverse(t_degenerate), SingularMatrix);
    CHECK_FALSE(is_invertible(t_degenerate));
}

TEST_CASE("hermiticity predicate") {
    CHECK(is_hermitian(half_pauli2()));
    CHECK(is_hermitian(transform_matrix(0.7, 1.3)));
    Mat2C skew = half_pauli2();
    skew.a12 += Complex{0.0, 1e-6};
    CHECK_FALSE(is_hermitian(skew, 1e-9));
}

TEST_CASE("jacobi identity on random triples") {
    testutil::MatrixGen gen(91u);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat2C a = gen.matrix();
        const Mat2C b = gen.matrix();
        const Mat2C c = gen.matrix();
        const Mat2C cyclic = add(add(commutator(a, commutator(b, c)),
                                     commutator(b, commutator(c, a))),
                                 commutator(c, commutator(a, b)));
        CHECK(mat_norm(cyclic) < 1e-12);
    }
}

TEST_CASE("commutator antisymmetry on random pairs") {
    testutil::MatrixGen gen(17u);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat2C a = gen.matrix();
        const Mat2C b = gen.matrix();
        CHECK(mat_norm(add(commutator(a, b), commutator(b, a))) < 1e-15);
    }
}

TEST_CASE("inner conjugate symmetry on random pairs") {
    testutil::MatrixGen gen(3u);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec2C u = gen.vector();
        const Vec2C v = gen.vector();
        CHECK(std::abs(inner(u, v) - std::conj(inner(v, u))) < 1e-15);
    }
}

TEST_CASE("finiteness predicates") {
    const Mat2C a = identity();
    CHECK(is_finite(a));
    Mat2C bad = a;
    bad.a12 = Complex{std::numeric_limits<double>::quiet_NaN(), 0.0};
    CHECK_FALSE(is_finite(bad));
    CHECK_FALSE(is_finite(Vec2C{Complex{1.0, 0.0},
                                Complex{std::numeric_limits<double>::infinity(), 0.0}}));
}
