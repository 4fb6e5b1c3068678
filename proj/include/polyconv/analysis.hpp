#ifndef POLYCONV_ANALYSIS_HPP
#define POLYCONV_ANALYSIS_HPP

#include <vector>

#include "polyconv/hermitian_poly.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Index of the graph singularity at 0 by root counting:
//   2 * (multiplicities of roots of q in the unit disc) - (degree - 1),
// where q(z) = dp/dzbar(z, 1). Requires homogeneous p whose zbar-derivative
// vanishes only at the origin; roots of q near the unit circle are rejected.
int maslov_index_algebraic(const HermitianPoly& p, const Tolerances& tol = default_tolerances());

// The same index as the winding number of theta -> dp/dzbar along a circle.
int maslov_index_winding(const HermitianPoly& p, double radius, int samples,
                         const Tolerances& tol = default_tolerances());

// Symbolic d^2/(dz dzbar) of Re(p / z^{j-1}) as a Laurent expression.
LaurentExpr laplacian_symbolic(const HermitianPoly& p, int j);

struct SubharmonicityReport {
    LaurentExpr laplacian;
    double min_on_annulus = 0;
    bool subharmonic = false;
    bool nowhere_harmonic = false;
    int radii_count = 0;
    int angle_count = 0;
    double max_imag_residue = 0; // symbolic values must be real on the grid
    double fd_max_rel_err = 0;   // five-point stencil cross-check
};

// Evaluates the symbolic Laplacian over a polar grid (parallel kernel),
// flags subharmonicity and the nowhere-harmonic property, and audits the
// symbolic values against finite differences at random grid points.
SubharmonicityReport subharmonicity_check(const HermitianPoly& p, int j,
                                          const std::vector<double>& radii, int angles,
                                          const Tolerances& tol = default_tolerances());

struct CurveAnalysis {
    int k = 0, j = 0;
    int samples = 0;
    struct Coincidence {
        double theta1, theta2;
        bool refined;
    };
    std::vector<Coincidence> coincidence_pairs;
    double min_arc_gap = 0; // radians, pi when only antipodal pairs exist
    bool property_star_star = false;
    double threshold_arc = 0; // pi / (k - j + 1)
};

// Samples C(theta) = p(e^{i theta}, e^{-i theta}) e^{-i k theta}, detects
// value coincidences by spatial hashing, refines each candidate pair by a
// 2x2 Newton iteration and reports the minimal circular arc gap among
// coincidence pairs together with the segment-length property.
CurveAnalysis curve_analysis(const HermitianPoly& p, int j, int samples,
                             const Tolerances& tol = default_tolerances());

// Circle-modulus constraint for the extra preimages of the auxiliary curve:
// branch 0: 3/t + 3 cos(2 psi - pi/3) - sqrt(3) sin(2 psi - pi/3)
// branch 1: 3/t + 3 cos(2 psi + pi/3) + sqrt(3) sin(2 psi + pi/3)
// A zero value puts the corresponding quadratic root on the unit circle.
double preimage_constraint(double t, double psi, int branch);

// Number of unit-circle solutions of g(z) = g(e^{i psi}) for
// g(z) = z^2 + t z^4 + (t^2/3) z^6, via the closed-form root moduli.
int preimage_count(double t, double psi, const Tolerances& tol = default_tolerances());

// Same count from explicit degree-6 root finding with a circle filter.
int preimage_count_bruteforce(double t, double psi, const Tolerances& tol = default_tolerances());

// Smallest t at which some psi admits an extra circle preimage, located by
// numerically minimizing the constraint over psi and bisecting in t.
double min_preimage_threshold(const Tolerances& tol = default_tolerances());

// Zeros of the branch constraint in psi over [0, pi); tangential zeros are
// reported once.
std::vector<double> preimage_constraint_zeros(double t, int branch,
                                              const Tolerances& tol = default_tolerances());

// Exposed parallel/serial kernel pair: evaluates values[i] = expr(r_i e^{i th_i})
// over the polar grid (radii outer, angles inner).
void evaluate_polar_grid(const LaurentExpr& expr, const std::vector<double>& radii, int angles,
                         std::vector<cxd>& values);
void evaluate_polar_grid_serial(const LaurentExpr& expr, const std::vector<double>& radii,
                                int angles, std::vector<cxd>& values);

// Exposed kernel pair: curve samples C(theta_i) at n uniform angles.
void sample_curve(const HermitianPoly& p, int n, std::vector<cxd>& values);
void sample_curve_serial(const HermitianPoly& p, int n, std::vector<cxd>& values);

} // namespace polyconv

#endif
