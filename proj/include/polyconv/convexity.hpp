#ifndef POLYCONV_CONVEXITY_HPP
#define POLYCONV_CONVEXITY_HPP

#include <map>
#include <optional>
#include <string>

#include "polyconv/invariants.hpp"
#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

enum class Status {
    LocallyPolynomiallyConvex,
    NotLocallyPolynomiallyConvex,
    HullContainsBall,
    HullContainsDiscFamily,
    Unknown,
};

std::string to_string(Status s);

// Decision outcome. `criterion` names the rule that produced a decided
// status (see README for the tag vocabulary); `witness` carries the
// numeric evidence, and for Unknown the per-criterion satisfaction margins
// (positive margin = criterion would fire).
struct ConvexityVerdict {
    Status status = Status::Unknown;
    std::string criterion;
    std::map<std::string, double> witness;
    std::string note;
};

// Pair test for R^2 vs (A + iI)R^2: rejected exactly when the spectrum of A
// is purely imaginary with modulus > 1 (trace ~ 0 and det > 1); the
// modulus-1 edge is reported Unknown since the rejection condition is strict.
ConvexityVerdict weinstock_pair_check(const Mat2& a,
                                      const Tolerances& tol = default_tolerances());

// Decision pipeline for R^2 u (A1+iI)R^2 u (A2+iI)R^2:
//  1. pairwise gate: weinstock_pair_check on A1, A2 and on the reduced
//     matrix of the pair (P1, P2);
//  2. sufficient criteria in a fixed trial order, each with both role
//     assignments; first match decides;
//  3. otherwise Unknown with margins for every criterion.
ConvexityVerdict three_plane_decider(const Mat2& a1, const Mat2& a2,
                                     const Tolerances& tol = default_tolerances());

enum class SurfaceKind { ExactCubic, Perturbed };

std::string to_string(SurfaceKind k);

struct FamilyClassification {
    double t = 0;
    SurfaceKind surface_kind = SurfaceKind::ExactCubic;
    ConvexityVerdict verdict;
    std::optional<int> maslov_index; // empty at the parabolic parameter t = 1
    struct Thresholds {
        double sqrt3_over_2;
        double star;
    } thresholds{};
};

// Band classification of the exact cubic family graph.
FamilyClassification classify_cubic_surface(double t,
                                            const Tolerances& tol = default_tolerances());

// Same bands for the o(|z|^3)-perturbed family, with the undecided bands
// widened: t = 1 and (1, star] stay Unknown.
FamilyClassification classify_perturbed_surface(double t,
                                                const Tolerances& tol = default_tolerances());

// t = 2 gamma from the degree-2 normal-form invariant, with the elliptic /
// parabolic / hyperbolic label.
struct BishopParameter {
    double t;
    std::string classification;
};

BishopParameter bishop_t(double gamma);

} // namespace polyconv

#endif
