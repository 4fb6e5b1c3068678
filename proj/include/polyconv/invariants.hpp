#ifndef POLYCONV_INVARIANTS_HPP
#define POLYCONV_INVARIANTS_HPP

#include <utility>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Matrix invariants of a plane pair in Weinstock form, plus membership in
// the parameter domain Omega = { det[A1,A2] != 0, two distinct eigenvalues
// of A1, i not in either spectrum }.
struct InvariantReport {
    double det_a1 = 0, det_a2 = 0;
    double tr_a1 = 0, tr_a2 = 0;
    double tr_a1a2 = 0;
    double det_a1a2 = 0;
    double det_commutator = 0;
    double theta_12 = 0, theta_21 = 0;
    double lambda_ = 0;
    double beta_ = 0;
    std::pair<cxd, cxd> spectrum_a1{}, spectrum_a2{};
    bool in_omega = false;
};

double theta_invariant(const Mat2& a1, const Mat2& a2);  // det A1 (tr A2)^2 + tr(A1A2)(tr(A1A2) - trA1 trA2)
double lambda_invariant(const Mat2& a1, const Mat2& a2); // 4 det(A1A2) - (trA1 trA2)^2 / 4
double beta_invariant(const Mat2& a1, const Mat2& a2);   // lambda - tr(A1A2)(tr(A1A2) - trA1 trA2)

InvariantReport compute_invariants(const Mat2& a1, const Mat2& a2,
                                   const Tolerances& tol = default_tolerances());

// Both routes to beta for the normal-form pair diag(l1,l2), [[s1,q],[q,s2]]:
// lhs assembles the matrices, rhs is the closed form
// 4 l1 l2 (s1 s2 - q^2) - (l1 - l2)^2 (s1 - s2)^2 / 4. Also reports whether
// beta > det A2 (tr A1)^2 and q^2 > (s1 + s2)^2 / 4 agree as booleans.
struct BetaIdentity {
    double lhs = 0, rhs = 0;
    bool beta_exceeds = false;
    bool q_exceeds = false;
    bool equivalent = false;
};

BetaIdentity beta_normalform_identity_check(double l1, double l2, double s1, double s2, double q);

} // namespace polyconv

#endif
