#ifndef POLYCONV_MATRIX2_HPP
#define POLYCONV_MATRIX2_HPP

#include <array>
#include <cmath>
#include <complex>
#include <utility>

#include "polyconv/errors.hpp"

namespace polyconv {

using cxd = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cxd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Real 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
    double a = 0, b = 0, c = 0, d = 0;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diag(double x, double y) { return {x, 0, 0, y}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    bool finite() const { return is_finite(a) && is_finite(b) && is_finite(c) && is_finite(d); }

    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2 inverse() const {
        const double dt = det();
        if (dt == 0.0) throw DegenerateInput("Mat2::inverse: singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    std::array<double, 2> apply(double x, double y) const { return {a * x + b * y, c * x + d * y}; }

    double max_abs() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }

    // Spectrum by the quadratic formula on (trace, det).
    std::pair<cxd, cxd> spectrum() const {
        const double tr = trace(), dt = det();
        const double disc = tr * tr - 4.0 * dt;
        if (disc >= 0.0) {
            const double s = std::sqrt(disc);
            return {cxd((tr + s) / 2, 0.0), cxd((tr - s) / 2, 0.0)};
        }
        const double s = std::sqrt(-disc);
        return {cxd(tr / 2, s / 2), cxd(tr / 2, -s / 2)};
    }
};

inline Mat2 commutator(const Mat2& x, const Mat2& y) { return x * y - y * x; }
inline double det_commutator(const Mat2& x, const Mat2& y) { return commutator(x, y).det(); }

// det(A + iI) = det A - 1 + i tr A; zero exactly when i is an eigenvalue,
// i.e. when (A + iI)R^2 fails to be totally real.
inline cxd det_a_plus_i(const Mat2& m) { return cxd(m.det() - 1.0, m.trace()); }

} // namespace polyconv

#endif
