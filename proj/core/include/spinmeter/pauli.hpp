#ifndef SPINMETER_PAULI_HPP
#define SPINMETER_PAULI_HPP

#include <array>
#include <cmath>
#include <complex>

namespace spinmeter {

using cx = std::complex<double>;

inline constexpr cx kI{0.0, 1.0};

/// Two-component spinor.
struct Vec2 {
    cx a{0.0, 0.0};
    cx b{0.0, 0.0};

    double norm2() const { return std::norm(a) + std::norm(b); }
};

/// Dense 2x2 complex matrix; row-major {a11, a12, a21, a22}.
struct Mat2 {
    cx a11{0.0, 0.0}, a12{0.0, 0.0}, a21{0.0, 0.0}, a22{0.0, 0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 adjoint() const {
        return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
    }

    cx trace() const { return a11 + a22; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
    }

    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        return {m.a11 * v.a + m.a12 * v.b, m.a21 * v.a + m.a22 * v.b};
    }

    friend Mat2 operator*(cx s, const Mat2& m) {
        return {s * m.a11, s * m.a12, s * m.a21, s * m.a22};
    }

    friend Mat2 operator+(const Mat2& l, const Mat2& r) {
        return {l.a11 + r.a11, l.a12 + r.a12, l.a21 + r.a21, l.a22 + r.a22};
    }

    friend Mat2 operator-(const Mat2& l, const Mat2& r) {
        return {l.a11 - r.a11, l.a12 - r.a12, l.a21 - r.a21, l.a22 - r.a22};
    }

    double maxAbs() const {
        return std::max(std::max(std::abs(a11), std::abs(a12)),
                        std::max(std::abs(a21), std::abs(a22)));
    }

    /// max element magnitude of U U^dag - 1.
    double unitarityDefect() const {
        Mat2 d = (*this) * adjoint() - identity();
        return d.maxAbs();
    }
};

inline Mat2 pauliX() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 pauliY() { return {0.0, -kI, kI, 0.0}; }
inline Mat2 pauliZ() { return {1.0, 0.0, 0.0, -1.0}; }

/// exp(-i angle (n.sigma)) for a real unit-ish vector n = (nx, ny, nz);
/// n is normalized internally, angle carries the magnitude.
inline Mat2 expPauli(double angle, double nx, double ny, double nz) {
    const double n = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (n == 0.0) return Mat2::identity();
    nx /= n;
    ny /= n;
    nz /= n;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {cx(c, -s * nz), cx(s * ny, -s * nx), cx(-s * ny, -s * nx), cx(c, s * nz)};
}

}  // namespace spinmeter

#endif
