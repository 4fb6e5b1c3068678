#ifndef POLYCONV_PLANES_HPP
#define POLYCONV_PLANES_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Complex 2x2 matrix; columns act on C^2 vectors.
struct CMat2 {
    cxd a, b, c, d; // [[a, b], [c, d]]
    std::array<cxd, 2> apply(const std::array<cxd, 2>& v) const {
        return {a * v[0] + b * v[1], c * v[0] + d * v[1]};
    }
    cxd det() const { return a * d - b * c; }
    CMat2 inverse() const;
    CMat2 operator*(const CMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Real 2-plane in C^2. Canonical data is the real-span basis pair; the
// graph form w = alpha z + beta zbar is kept when the plane was built
// from one or is recoverable.
class TotallyRealPlane {
public:
    static TotallyRealPlane from_graph(cxd alpha, cxd beta);
    static TotallyRealPlane from_basis(const std::array<cxd, 2>& u, const std::array<cxd, 2>& v);

    const std::array<cxd, 2>& u() const { return u_; }
    const std::array<cxd, 2>& v() const { return v_; }
    std::optional<std::pair<cxd, cxd>> graph() const { return graph_; }

    // |det [u v]| on the normalized basis; the plane is totally real when
    // this exceeds tol.totally_real_det.
    double totally_real_margin() const;
    bool is_totally_real(const Tolerances& tol = default_tolerances()) const;

    // Point of the plane with parameters (x, y): x*u + y*v.
    std::array<cxd, 2> point(double x, double y) const;

    // Recover the graph form by solving for (alpha, beta); throws
    // DegenerateInput when the plane is not a graph over the z-axis.
    std::pair<cxd, cxd> to_graph(const Tolerances& tol = default_tolerances()) const;

private:
    std::array<cxd, 2> u_{}, v_{};
    std::optional<std::pair<cxd, cxd>> graph_;
};

// Result of mapping p0 -> R^2: per-plane matrices A_j with image planes
// (A_j + iI)R^2, plus the complex-linear map that was applied.
struct WeinstockForm {
    std::vector<Mat2> matrices;
    CMat2 map;
};

WeinstockForm weinstock_normal_form(const TotallyRealPlane& p0,
                                    const std::vector<TotallyRealPlane>& others,
                                    const Tolerances& tol = default_tolerances());

// Weinstock matrix of the pair (P1, P2) after the map z -> (A1 - iI)z,
// which sends P1 to R^2:  B = (A1 A2 + I)(A1 - A2)^{-1}.
Mat2 pairwise_reduction(const Mat2& a1, const Mat2& a2,
                        const Tolerances& tol = default_tolerances());

// Simultaneous similarity normal form: T a T^{-1} diagonal, T b T^{-1}
// symmetric with equal off-diagonal entries. Requires a with two distinct
// real eigenvalues and det[a, b] > 0.
struct SimultaneousNormalForm {
    Mat2 diag;      // T a T^{-1}
    Mat2 symmetric; // T b T^{-1}, equal off-diagonals
    Mat2 transform; // T
};

SimultaneousNormalForm simultaneous_normal_form(const Mat2& a, const Mat2& b,
                                                const Tolerances& tol = default_tolerances());

// Coefficients of the cubic a1 z^2 zbar + a2 z zbar^2 + a3 zbar^3 and of
// the holomorphic lift p(z, w) = a3 w^3 + a2 z w^2 + a1 z^2 w.
struct CubicCoefficients {
    cxd a1, a2, a3;
};

// The three totally-real graph planes whose union is the preimage of the
// cubic's graph under (z, w) -> (z, p(z, w)); requires a2^2 = 3 a1 a3 and
// a3 != 0, otherwise throws NotFactorable with the residual.
std::array<TotallyRealPlane, 3> factor_cubic_preimage(const CubicCoefficients& c,
                                                      const Tolerances& tol = default_tolerances());

// Max of |p(z, w) - p(z, zbar)| over random points of each plane with
// |z| <= 1, where p is the holomorphic lift of c.
double verify_pullback(const CubicCoefficients& c,
                       const std::vector<TotallyRealPlane>& planes, int samples,
                       const Tolerances& tol = default_tolerances());

// Evaluate the holomorphic lift p(z, w) of c.
cxd cubic_lift_eval(const CubicCoefficients& c, cxd z, cxd w);

// Branch corrections for the perturbed preimage surfaces: solves
// (t f + u (zeta + t zbar_zeta))^3 = (zeta + t zbar_zeta)^3 + 3 t F(zeta)
// for the o(|zeta|) correction f, with u the cube root of unity attached
// to the branch (u = exp(2 pi i b / 3), matching the plane the branch
// perturbs). Principal cube root of (1 + small) throughout.
cxd branch_lift(double t, int branch, const std::function<cxd(cxd)>& F, cxd zeta,
                const Tolerances& tol = default_tolerances());

// Distance between the real spans of two planes (largest principal-angle
// sine); used to state coordinate consistency of normal forms.
double subspace_distance(const TotallyRealPlane& p, const TotallyRealPlane& q);

} // namespace polyconv

#endif
