#ifndef POLYCONV_CERTIFY_HPP
#define POLYCONV_CERTIFY_HPP

#include <string>
#include <vector>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Separation certificates behind the three-plane sufficiency results and
// the t = 1 family case. Each case fixes a polynomial and per-plane target
// regions; sampling verifies the region claims and the zero-fiber shape.
enum class KallinCase {
    SumOfSquaresT31, // p(z,w) = z^2 + w^2, det A1 = 0, det A2 >= 0
    SumOfSquaresT32, // p(z,w) = z^2 + w^2, -1 <= det Aj < 0
    ProductZwT33,    // p(z,w) = z w, det Aj < 0, beta above the mixed floor
    LinearS1,        // F(z,w) = z on the t = 1 planes after a linear change
};

std::string to_string(KallinCase c);
KallinCase kallin_case_from_string(const std::string& s);

struct KallinReport {
    KallinCase case_id{};
    double max_violation = 0; // worst normalized signed distance from the region
    bool zero_fiber_ok = true;
    int samples = 0;
    double ball_radius = 0;
    unsigned seed = 0;
    std::vector<std::string> assumed; // theorem hypotheses that are not machine-checkable
};

// Matrix-pair cases. Hypotheses of the cited result are gated up front
// (HypothesisViolated names the failing one); the pair is brought to the
// simultaneous normal form the proofs use, the planes are sampled over the
// parameter disc with a low-discrepancy sequence, and every sample is
// checked against its declared region.
KallinReport kallin_verify(KallinCase c, const Mat2& a1, const Mat2& a2, int samples,
                           double ball_radius, const Tolerances& tol = default_tolerances());

// Serial reference twin of the sampling scan; identical output.
KallinReport kallin_verify_serial(KallinCase c, const Mat2& a1, const Mat2& a2, int samples,
                                  double ball_radius,
                                  const Tolerances& tol = default_tolerances());

// The t = 1 family case (three planes meeting along a line, images on the
// lines R, (1 - i sqrt3) R, (1 + i sqrt3) R under F(z,w) = z).
KallinReport kallin_verify_s1(int samples, double ball_radius,
                              const Tolerances& tol = default_tolerances());
KallinReport kallin_verify_s1_serial(int samples, double ball_radius,
                                     const Tolerances& tol = default_tolerances());

// 2-d Halton point (bases 2 and 3), used for the sampling scans.
std::pair<double, double> halton2(unsigned long long index);

} // namespace polyconv

#endif
