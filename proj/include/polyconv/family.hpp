#ifndef POLYCONV_FAMILY_HPP
#define POLYCONV_FAMILY_HPP

#include <array>

#include "polyconv/hermitian_poly.hpp"
#include "polyconv/planes.hpp"

namespace polyconv {

// The one-parameter model family: graph of
//   p_t(z, zbar) = z^2 zbar + t z zbar^2 + (t^2/3) zbar^3,  t > 0.

HermitianPoly family_poly(double t);

CubicCoefficients family_cubic(double t); // (1, t, t^2/3)

// The three preimage planes of the family cubic, base plane w = zbar first.
std::array<TotallyRealPlane, 3> family_planes(double t,
                                              const Tolerances& tol = default_tolerances());

// Weinstock matrices (A1, A2) of the family planes; throws NotTransverse
// at t = 1 where the planes meet along a line.
std::pair<Mat2, Mat2> family_matrices(double t, const Tolerances& tol = default_tolerances());

// sqrt(3)/2 and sqrt((15 - sqrt(33))/8): the two decision thresholds of the
// family classification.
double threshold_sqrt3_over_2();
double threshold_star();

} // namespace polyconv

#endif
