#include "polyconv/family.hpp"

#include <cmath>

#include "polyconv/errors.hpp"

namespace polyconv {

HermitianPoly family_poly(double t) {
    if (!is_finite(t)) throw InvalidParameter("family_poly: non-finite t");
    HermitianPoly p;
    p.set(2, 1, cxd(1, 0));
    p.set(1, 2, cxd(t, 0));
    p.set(0, 3, cxd(t * t / 3.0, 0));
    return p;
}

CubicCoefficients family_cubic(double t) {
    if (!is_finite(t)) throw InvalidParameter("family_cubic: non-finite t");
    return {cxd(1, 0), cxd(t, 0), cxd(t * t / 3.0, 0)};
}

std::array<TotallyRealPlane, 3> family_planes(double t, const Tolerances& tol) {
    if (!(t > 0.0)) throw InvalidParameter("family_planes: t must be positive");
    return factor_cubic_preimage(family_cubic(t), tol);
}

std::pair<Mat2, Mat2> family_matrices(double t, const Tolerances& tol) {
    const auto planes = family_planes(t, tol);
    const auto form = weinstock_normal_form(planes[0], {planes[1], planes[2]}, tol);
    return {form.matrices[0], form.matrices[1]};
}

double threshold_sqrt3_over_2() { return std::sqrt(3.0) / 2.0; }

double threshold_star() { return std::sqrt((15.0 - std::sqrt(33.0)) / 8.0); }

} // namespace polyconv
