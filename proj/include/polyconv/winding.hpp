#ifndef POLYCONV_WINDING_HPP
#define POLYCONV_WINDING_HPP

#include <vector>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Winding number of a closed discrete curve around the origin: total
// principal-branch argument change over the cyclic sample sequence / 2 pi.
// Throws CurveThroughOrigin when a sample is within tol.curve_origin_guard
// of 0 and UndersampledCurve when a single angular increment reaches pi.
int winding_number(const std::vector<cxd>& samples, const Tolerances& tol = default_tolerances());

} // namespace polyconv

#endif
