#include "polyconv/convexity.hpp"

#include <algorithm>
#include <cmath>

#include "polyconv/analysis.hpp"
#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"
#include "polyconv/planes.hpp"

namespace polyconv {

std::string to_string(Status s) {
    switch (s) {
        case Status::LocallyPolynomiallyConvex: return "LocallyPolynomiallyConvex";
        case Status::NotLocallyPolynomiallyConvex: return "NotLocallyPolynomiallyConvex";
        case Status::HullContainsBall: return "HullContainsBall";
        case Status::HullContainsDiscFamily: return "HullContainsDiscFamily";
        case Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string to_string(SurfaceKind k) {
    return k == SurfaceKind::ExactCubic ? "cubic" : "perturbed";
}

ConvexityVerdict weinstock_pair_check(const Mat2& a, const Tolerances& tol) {
    if (!a.finite()) throw InvalidInput("weinstock_pair_check: non-finite matrix");
    const double tr = a.trace(), det = a.det();
    ConvexityVerdict v;
    v.witness["trace"] = tr;
    v.witness["det"] = det;
    if (std::abs(tr) <= tol.weinstock_band) {
        // Purely imaginary spectrum +- i sqrt(det) when det > 0.
        if (det > 1.0 + tol.weinstock_band) {
            v.status = Status::NotLocallyPolynomiallyConvex;
            v.criterion = "weinstock-pair";
            v.witness["imaginary_modulus"] = std::sqrt(det);
            return v;
        }
        if (std::abs(det - 1.0) <= tol.weinstock_band) {
            v.status = Status::Unknown;
            v.note = "spectrum on the modulus-1 edge; the rejection condition is strict";
            return v;
        }
    }
    v.status = Status::LocallyPolynomiallyConvex;
    v.criterion = "weinstock-pair";
    return v;
}

namespace {

bool real_spectrum(const Mat2& a, const Tolerances& tol) {
    return a.trace() * a.trace() - 4.0 * a.det() > tol.eigen_discriminant;
}

bool complex_spectrum(const Mat2& a, const Tolerances& tol) {
    return a.trace() * a.trace() - 4.0 * a.det() < -tol.eigen_discriminant;
}

// Margin of a conjunction of strict inequalities: the smallest slack.
double conj_margin(std::initializer_list<double> slacks) {
    double m = std::numeric_limits<double>::infinity();
    for (double s : slacks) m = std::min(m, s);
    return m;
}

struct Criterion {
    std::string tag;
    double margin; // > 0 iff the criterion fires
    bool applicable;
};

} // namespace

ConvexityVerdict three_plane_decider(const Mat2& a1, const Mat2& a2, const Tolerances& tol) {
    if (!a1.finite() || !a2.finite()) throw InvalidInput("three_plane_decider: non-finite matrix");

    ConvexityVerdict out;
    const InvariantReport inv = compute_invariants(a1, a2, tol);
    out.witness["det_a1"] = inv.det_a1;
    out.witness["det_a2"] = inv.det_a2;
    out.witness["det_commutator"] = inv.det_commutator;
    out.witness["theta_12"] = inv.theta_12;
    out.witness["theta_21"] = inv.theta_21;
    out.witness["lambda"] = inv.lambda_;
    out.witness["beta"] = inv.beta_;

    // Step 1: pairwise gate. A failing pair already embeds a nontrivial
    // hull in the union of all three planes.
    const ConvexityVerdict w1 = weinstock_pair_check(a1, tol);
    const ConvexityVerdict w2 = weinstock_pair_check(a2, tol);
    ConvexityVerdict w12;
    bool pair12_transverse = true;
    try {
        w12 = weinstock_pair_check(pairwise_reduction(a1, a2, tol), tol);
    } catch (const NotTransverse&) {
        pair12_transverse = false;
    }
    for (const auto* w : {&w1, &w2}) {
        if (w->status == Status::NotLocallyPolynomiallyConvex) {
            out.status = Status::NotLocallyPolynomiallyConvex;
            out.criterion = "pairwise";
            out.witness["failing_pair_det"] = w->witness.at("det");
            return out;
        }
    }
    if (pair12_transverse && w12.status == Status::NotLocallyPolynomiallyConvex) {
        out.status = Status::NotLocallyPolynomiallyConvex;
        out.criterion = "pairwise";
        out.witness["failing_pair_det"] = w12.witness.at("det");
        return out;
    }
    if (w1.status == Status::Unknown || w2.status == Status::Unknown ||
        (pair12_transverse && w12.status == Status::Unknown)) {
        out.status = Status::Unknown;
        out.note = "a pairwise test sits on the modulus-1 edge";
        return out;
    }
    if (!pair12_transverse) {
        out.status = Status::Unknown;
        out.note = "planes P1 and P2 meet away from 0; pairwise hypothesis not verifiable";
        return out;
    }

    // Step 2: sufficient criteria, fixed trial order.
    std::vector<Criterion> criteria;

    const bool real1 = real_spectrum(a1, tol), real2 = real_spectrum(a2, tol);
    const bool cplx1 = complex_spectrum(a1, tol), cplx2 = complex_spectrum(a2, tol);
    const double dc = inv.det_commutator;
    const double omega_margin =
        conj_margin({std::abs(dc) - tol.omega_commutator,
                     std::abs(inv.spectrum_a1.first - inv.spectrum_a1.second) -
                         tol.omega_spectral_separation});

    // Criterion family: both spectra real.
    {
        const bool app = inv.in_omega && real1 && real2;
        const double branch1 = conj_margin({inv.det_a1 * dc, inv.det_a2 * dc});
        const double branch2 =
            std::max(conj_margin({-inv.det_a1 * dc, -inv.det_a1 * inv.theta_12}),
                     conj_margin({-inv.det_a2 * dc, -inv.det_a2 * inv.theta_21}));
        criteria.push_back({"three-planes-real-spectra",
                            conj_margin({omega_margin, std::max(branch1, branch2)}), app});
    }
    // One spectrum real, the other complex; the real one leads.
    {
        const bool app12 = inv.in_omega && real1 && cplx2;
        const bool app21 = inv.in_omega && real2 && cplx1;
        double margin = -std::numeric_limits<double>::infinity();
        if (app12)
            margin = std::max(conj_margin({-inv.det_a1 * dc, -inv.det_a1 * inv.theta_12}),
                              inv.lambda_ - inv.theta_12);
        if (app21)
            margin = std::max(margin,
                              std::max(conj_margin({-inv.det_a2 * dc, -inv.det_a2 * inv.theta_21}),
                                       inv.lambda_ - inv.theta_21));
        criteria.push_back({"three-planes-mixed-spectra", conj_margin({omega_margin, margin}),
                            app12 || app21});
    }
    // Both spectra complex.
    {
        const bool app = inv.in_omega && cplx1 && cplx2;
        const double margin =
            std::max(inv.lambda_ - inv.theta_12, inv.lambda_ - inv.theta_21);
        criteria.push_back({"three-planes-complex-spectra", conj_margin({omega_margin, margin}), app});
    }
    // Singular determinant case: det A_j = 0, det A_other >= 0, det[A1,A2] > 0,
    // with A_j carrying two distinct real eigenvalues (|tr| > 0 when det = 0).
    {
        auto singular_case = [&](double det_this, double det_other, double tr_this) {
            const double zero_part = tol.hypothesis_zero_band - std::abs(det_this);
            return conj_margin({zero_part, det_other + tol.hypothesis_zero_band, dc,
                                std::abs(tr_this) - tol.eigen_discriminant});
        };
        const double margin = std::max(singular_case(inv.det_a1, inv.det_a2, inv.tr_a1),
                                       singular_case(inv.det_a2, inv.det_a1, inv.tr_a2));
        criteria.push_back({"three-planes-singular-det", margin, true});
    }
    // Small negative determinants: |det A_j| <= 1, det A_j < 0, det[A1,A2] > 0.
    {
        const double margin =
            conj_margin({-inv.det_a1, -inv.det_a2, 1.0 - std::abs(inv.det_a1),
                         1.0 - std::abs(inv.det_a2), dc});
        criteria.push_back({"three-planes-small-negative-det", margin, true});
    }
    // Product-separation case: det[A1,A2] > 0, det A_j < 0 and
    // beta > min(det A2 (tr A1)^2, det A1 (tr A2)^2).
    {
        const double floor = std::min(inv.det_a2 * inv.tr_a1 * inv.tr_a1,
                                      inv.det_a1 * inv.tr_a2 * inv.tr_a2);
        const double margin = conj_margin({dc, -inv.det_a1, -inv.det_a2, inv.beta_ - floor});
        out.witness["beta_gap"] = inv.beta_ - floor;
        criteria.push_back({"three-planes-product-separation", margin, true});
    }

    for (const auto& c : criteria) {
        if (c.applicable && c.margin > 0.0) {
            out.status = Status::LocallyPolynomiallyConvex;
            out.criterion = c.tag;
            out.witness["criterion_margin"] = c.margin;
            return out;
        }
    }

    out.status = Status::Unknown;
    out.note = "no sufficient criterion applies";
    for (const auto& c : criteria)
        out.witness["margin_" + c.tag] =
            c.applicable ? c.margin : -std::numeric_limits<double>::infinity();
    return out;
}

namespace {

std::optional<int> family_maslov_index(double t, const Tolerances& tol) {
    try {
        return maslov_index_algebraic(family_poly(t), tol);
    } catch (const RootOnCircle&) {
        return std::nullopt; // the index is undefined where q has circle roots (t = 1)
    } catch (const NotIsolatedSingularity&) {
        return std::nullopt;
    }
}

FamilyClassification classify_family(double t, SurfaceKind kind, const Tolerances& tol) {
    if (!is_finite(t) || t <= 0.0)
        throw InvalidParameter("classify: t must be positive and finite");

    const double s32 = threshold_sqrt3_over_2();
    const double star = threshold_star();
    const double edge = tol.band_edge;
    const bool perturbed = kind == SurfaceKind::Perturbed;

    FamilyClassification fc;
    fc.t = t;
    fc.surface_kind = kind;
    fc.thresholds = {s32, star};
    fc.maslov_index = family_maslov_index(t, tol);

    ConvexityVerdict& v = fc.verdict;
    v.witness["t"] = t;
    v.witness["sqrt3_over_2"] = s32;
    v.witness["star"] = star;

    if (std::abs(t - 1.0) <= edge) {
        if (perturbed) {
            v.status = Status::Unknown;
            v.criterion = "parabolic-open";
            v.note = "undecided at the parabolic parameter for perturbed surfaces";
        } else {
            v.status = Status::LocallyPolynomiallyConvex;
            v.criterion = "parabolic-exact-cubic";
        }
        return fc;
    }
    if (t < s32 - edge) {
        v.status = Status::HullContainsBall;
        v.criterion = "ball-band";
        return fc;
    }
    if (t < 1.0) {
        v.status = Status::HullContainsDiscFamily;
        v.criterion = "disc-band";
        return fc;
    }
    // t > 1 from here.
    if (t > star + edge) {
        v.status = Status::LocallyPolynomiallyConvex;
        v.criterion = "above-star";
        return fc;
    }
    if (std::abs(t - star) <= edge && !perturbed) {
        // The endpoint is included for the exact cubic; the strict-inequality
        // reading is recorded alongside.
        v.status = Status::LocallyPolynomiallyConvex;
        v.criterion = "above-star";
        v.note = "endpoint case: included per the inclusive threshold reading; "
                 "the strict reading would leave it undecided";
        v.witness["endpoint_distance"] = t - star;
        return fc;
    }
    v.status = Status::Unknown;
    v.criterion = perturbed ? "gap-band" : "conjectured-gap";
    v.note = "between the parabolic parameter and the decidable threshold";
    v.witness["distance_to_star"] = star - t;
    return fc;
}

} // namespace

FamilyClassification classify_cubic_surface(double t, const Tolerances& tol) {
    return classify_family(t, SurfaceKind::ExactCubic, tol);
}

FamilyClassification classify_perturbed_surface(double t, const Tolerances& tol) {
    return classify_family(t, SurfaceKind::Perturbed, tol);
}

BishopParameter bishop_t(double gamma) {
    if (!is_finite(gamma) || gamma < 0.0)
        throw InvalidParameter("bishop_t: gamma must be nonnegative");
    const double t = 2.0 * gamma;
    BishopParameter out{t, "parabolic"};
    if (t < 1.0) out.classification = "elliptic";
    if (t > 1.0) out.classification = "hyperbolic";
    return out;
}

} // namespace polyconv
