#include "polyconv/invariants.hpp"

#include <cmath>

#include "polyconv/errors.hpp"

namespace polyconv {

double theta_invariant(const Mat2& a1, const Mat2& a2) {
    const double t12 = (a1 * a2).trace();
    return a1.det() * a2.trace() * a2.trace() + t12 * (t12 - a1.trace() * a2.trace());
}

double lambda_invariant(const Mat2& a1, const Mat2& a2) {
    const double tt = a1.trace() * a2.trace();
    return 4.0 * (a1 * a2).det() - tt * tt / 4.0;
}

double beta_invariant(const Mat2& a1, const Mat2& a2) {
    const double t12 = (a1 * a2).trace();
    return lambda_invariant(a1, a2) - t12 * (t12 - a1.trace() * a2.trace());
}

InvariantReport compute_invariants(const Mat2& a1, const Mat2& a2, const Tolerances& tol) {
    if (!a1.finite() || !a2.finite()) throw InvalidInput("compute_invariants: non-finite matrix");
    InvariantReport r;
    r.det_a1 = a1.det();
    r.det_a2 = a2.det();
    r.tr_a1 = a1.trace();
    r.tr_a2 = a2.trace();
    r.tr_a1a2 = (a1 * a2).trace();
    r.det_a1a2 = (a1 * a2).det();
    r.det_commutator = det_commutator(a1, a2);
    r.theta_12 = theta_invariant(a1, a2);
    r.theta_21 = theta_invariant(a2, a1);
    r.lambda_ = lambda_invariant(a1, a2);
    r.beta_ = beta_invariant(a1, a2);
    r.spectrum_a1 = a1.spectrum();
    r.spectrum_a2 = a2.spectrum();

    const double sep = std::abs(r.spectrum_a1.first - r.spectrum_a1.second);
    const double i_dist =
        std::min(std::min(std::abs(r.spectrum_a1.first - cxd(0, 1)),
                          std::abs(r.spectrum_a1.second - cxd(0, 1))),
                 std::min(std::abs(r.spectrum_a2.first - cxd(0, 1)),
                          std::abs(r.spectrum_a2.second - cxd(0, 1))));
    r.in_omega = std::abs(r.det_commutator) > tol.omega_commutator &&
                 sep > tol.omega_spectral_separation &&
                 i_dist > tol.omega_spectral_i_distance;
    return r;
}

BetaIdentity beta_normalform_identity_check(double l1, double l2, double s1, double s2, double q) {
    const Mat2 a1 = Mat2::diag(l1, l2);
    const Mat2 a2{s1, q, q, s2};
    BetaIdentity out;
    out.lhs = beta_invariant(a1, a2);
    out.rhs = 4.0 * l1 * l2 * (s1 * s2 - q * q) -
              (l1 - l2) * (l1 - l2) * (s1 - s2) * (s1 - s2) / 4.0;
    out.beta_exceeds = out.lhs > a2.det() * a1.trace() * a1.trace();
    out.q_exceeds = q * q > (s1 + s2) * (s1 + s2) / 4.0;
    out.equivalent = out.beta_exceeds == out.q_exceeds;
    return out;
}

} // namespace polyconv
