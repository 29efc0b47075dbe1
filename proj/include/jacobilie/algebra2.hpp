#pragma once

// Complex 2x2 linear algebra. Everything here is closed-form (adjugate
// inverse, entrywise norms); there is deliberately no general
// decomposition machinery.

#include <algorithm>
#include <cmath>
#include <complex>

#include "jacobilie/errors.hpp"

namespace jacobilie {

using Complex = std::complex<double>;

struct Vec2C {
    Complex c1{0.0, 0.0};
    Complex c2{0.0, 0.0};
};

struct Mat2C {
    Complex a11{0.0, 0.0};
    Complex a12{0.0, 0.0};
    Complex a21{0.0, 0.0};
    Complex a22{0.0, 0.0};
};

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool is_finite(const Vec2C& v) { return is_finite(v.c1) && is_finite(v.c2); }

inline bool is_finite(const Mat2C& a) {
    return is_finite(a.a11) && is_finite(a.a12) && is_finite(a.a21) && is_finite(a.a22);
}

// <u|v>, conjugate-linear in the first slot.
inline Complex inner(const Vec2C& u, const Vec2C& v) {
    return std::conj(u.c1) * v.c1 + std::conj(u.c2) * v.c2;
}

inline Mat2C identity() {
    return {Complex{1.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{1.0, 0.0}};
}

inline Mat2C add(const Mat2C& a, const Mat2C& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
}

inline Mat2C sub(const Mat2C& a, const Mat2C& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
}

inline Mat2C scale(Complex s, const Mat2C& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
}

inline Mat2C matmul(const Mat2C& a, const Mat2C& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

inline Vec2C matvec(const Mat2C& a, const Vec2C& v) {
    return {a.a11 * v.c1 + a.a12 * v.c2, a.a21 * v.c1 + a.a22 * v.c2};
}

// |u><v| as a matrix: entry (a,b) = u_a * conj(v_b).
inline Mat2C outer(const Vec2C& u, const Vec2C& v) {
    return {u.c1 * std::conj(v.c1), u.c1 * std::conj(v.c2),
            u.c2 * std::conj(v.c1), u.c2 * std::conj(v.c2)};
}

// ab - ba.
inline Mat2C commutator(const Mat2C& a, const Mat2C& b) {
    return sub(matmul(a, b), matmul(b, a));
}

// Conjugate transpose.
inline Mat2C dagger(const Mat2C& a) {
    return {std::conj(a.a11), std::conj(a.a21), std::conj(a.a12), std::conj(a.a22)};
}

inline Complex det(const Mat2C& a) { return a.a11 * a.a22 - a.a12 * a.a21; }

inline Complex trace(const Mat2C& a) { return a.a11 + a.a22; }

// Max absolute entry; the norm used for every approximate-equality
// check in this library (entries are O(1) throughout).
inline double mat_norm(const Mat2C& a) {
    return std::max(std::max(std::abs(a.a11), std::abs(a.a12)),
                    std::max(std::abs(a.a21), std::abs(a.a22)));
}

inline double vec_norm(const Vec2C& v) { return std::max(std::abs(v.c1), std::abs(v.c2)); }

inline bool is_hermitian(const Mat2C& a, double tol = 1e-12) {
    return std::abs(a.a11 - std::conj(a.a11)) <= tol &&
           std::abs(a.a22 - std::conj(a.a22)) <= tol &&
           std::abs(a.a12 - std::conj(a.a21)) <= tol;
}

inline bool is_invertible(const Mat2C& a, double tol = 1e-12) {
    return std::abs(det(a)) > tol;
}

// Adjugate inverse. Throws SingularMatrix if |det| <= tol; downstream
// this is the signal for the |gamma| = 1 degeneracy.
inline Mat2C inverse(const Mat2C& a, double tol = 1e-12) {
    const Complex d = det(a);
    if (!(std::abs(d) > tol)) {
        throw SingularMatrix("inverse: |det| <= tolerance");
    }
    const Complex r = 1.0 / d;
    return {r * a.a22, -r * a.a12, -r * a.a21, r * a.a11};
}

} // namespace jacobilie
