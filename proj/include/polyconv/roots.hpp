#ifndef POLYCONV_ROOTS_HPP
#define POLYCONV_ROOTS_HPP

#include <complex>
#include <vector>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

struct RootSet {
    struct Root {
        cxd location;
        int multiplicity = 1;
    };
    std::vector<Root> roots;
    double residual = 0.0; // max |q(location)| after polishing
    int degree = 0;        // degree after trimming exact-zero leading coefficients
};

// All complex roots of q (coefficients low order first) with multiplicities.
// Aberth-Ehrlich simultaneous iteration; multiple roots are detected by
// clustering and polished on the appropriate derivative.
RootSet find_roots(const std::vector<cxd>& coeffs, const Tolerances& tol = default_tolerances());

// Horner evaluation of q and its derivative.
cxd poly_eval(const std::vector<cxd>& coeffs, cxd z);
std::vector<cxd> poly_derivative(const std::vector<cxd>& coeffs);

} // namespace polyconv

#endif
