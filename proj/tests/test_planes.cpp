#include <doctest.h>

#include <cmath>
#include <random>

#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"
#include "polyconv/planes.hpp"

using namespace polyconv;

namespace {

// Closed-form Weinstock matrices of the family planes, used as the
// independent oracle for the normal-form construction (any output must be
// simultaneously real-similar to this pair).
std::pair<Mat2, Mat2> family_matrices_closed_form(double t) {
    const double s3 = std::sqrt(3.0);
    const Mat2 a1{t / (s3 * (1 + t)), 1 / (1 + t), -1 / (1 - t), -t / (s3 * (1 - t))};
    const Mat2 a2{-t / (s3 * (1 + t)), 1 / (1 + t), -1 / (1 - t), t / (s3 * (1 - t))};
    return {a1, a2};
}

} // namespace

TEST_CASE("weinstock normal form reproduces the family similarity invariants at t = 2") {
    const double t = 2.0;
    const auto [a1, a2] = family_matrices(t);
    const auto [c1, c2] = family_matrices_closed_form(t);
    CHECK(a1.trace() == doctest::Approx(c1.trace()).epsilon(1e-12));
    CHECK(a2.trace() == doctest::Approx(c2.trace()).epsilon(1e-12));
    CHECK(a1.det() == doctest::Approx(c1.det()).epsilon(1e-12));
    CHECK(a2.det() == doctest::Approx(c2.det()).epsilon(1e-12));
    CHECK((a1 * a2).trace() == doctest::Approx((c1 * c2).trace()).epsilon(1e-12));
    CHECK(det_commutator(a1, a2) == doctest::Approx(det_commutator(c1, c2)).epsilon(1e-12));
}

TEST_CASE("weinstock normal form of i R^2 over R^2 is the zero matrix") {
    const auto p0 = TotallyRealPlane::from_basis({cxd(1, 0), cxd(0, 0)}, {cxd(0, 0), cxd(1, 0)});
    const auto irr = TotallyRealPlane::from_basis({cxd(0, 1), cxd(0, 0)}, {cxd(0, 0), cxd(0, 1)});
    const auto form = weinstock_normal_form(p0, {irr});
    CHECK(form.matrices[0].max_abs() < 1e-14);
}

TEST_CASE("weinstock normal form rejects a repeated plane") {
    const auto p0 = TotallyRealPlane::from_basis({cxd(1, 0), cxd(0, 0)}, {cxd(0, 0), cxd(1, 0)});
    CHECK_THROWS_AS(weinstock_normal_form(p0, {p0}), NotTransverse);
}

TEST_CASE("weinstock normal form is coordinate consistent") {
    for (double t : {0.5, 0.8, 1.7, 2.5}) {
        const auto planes = family_planes(t);
        const auto form = weinstock_normal_form(planes[0], {planes[1], planes[2]});
        const CMat2 inv = form.map.inverse();
        for (size_t j = 0; j < 2; ++j) {
            const Mat2& a = form.matrices[j];
            // Reconstruct the plane from {A x + i x} and pull it back.
            const auto e1 = inv.apply({cxd(a.a, 1), cxd(a.c, 0)});
            const auto e2 = inv.apply({cxd(a.b, 0), cxd(a.d, 1)});
            const auto rebuilt = TotallyRealPlane::from_basis(e1, e2);
            CHECK(subspace_distance(rebuilt, planes[j + 1]) <= 1e-9);
        }
    }
}

TEST_CASE("pairwise reduction trace matches the closed form at t = 2") {
    const auto [a1, a2] = family_matrices(2.0);
    const Mat2 b = pairwise_reduction(a1, a2);
    const double t = 2.0;
    const double expected = std::sqrt(3.0) * (1.0 - (3 - t * t) / (3 * (1 - t * t)));
    CHECK(b.trace() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(b.trace() == doctest::Approx(8.0 * std::sqrt(3.0) / 9.0).epsilon(1e-12));
}

TEST_CASE("pairwise reduction degenerate cases") {
    CHECK(pairwise_reduction(Mat2::identity(), Mat2::identity() * -1.0).max_abs() < 1e-15);
    CHECK_THROWS_AS(pairwise_reduction(Mat2::diag(1, 2), Mat2::diag(1, 2)), NotTransverse);
}

TEST_CASE("simultaneous normal form rescales the off-diagonals") {
    const Mat2 a = Mat2::diag(1, 2);
    const Mat2 b{0, 1, 4, 0};
    const auto nf = simultaneous_normal_form(a, b);
    CHECK(nf.diag.a == doctest::Approx(2.0)); // eigenvalues come out descending
    CHECK(nf.diag.d == doctest::Approx(1.0));
    CHECK(nf.symmetric.b == doctest::Approx(nf.symmetric.c).epsilon(1e-14));
    CHECK(std::abs(nf.symmetric.b) == doctest::Approx(2.0).epsilon(1e-12));

    // The transform actually conjugates both matrices.
    const Mat2 tinv = nf.transform.inverse();
    const Mat2 ca = nf.transform * a * tinv;
    const Mat2 cb = nf.transform * b * tinv;
    CHECK((ca - nf.diag).max_abs() < 1e-12);
    CHECK((cb - nf.symmetric).max_abs() < 1e-12);
}

TEST_CASE("simultaneous normal form preserves traces, determinants and the commutator sign") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    int done = 0;
    while (done < 50) {
        const Mat2 a{unif(rng), unif(rng), unif(rng), unif(rng)};
        const Mat2 b{unif(rng), unif(rng), unif(rng), unif(rng)};
        if (a.trace() * a.trace() - 4 * a.det() <= 1e-3) continue;
        if (det_commutator(a, b) <= 1e-3) continue;
        const auto nf = simultaneous_normal_form(a, b);
        CHECK(nf.diag.trace() == doctest::Approx(a.trace()).epsilon(1e-10));
        CHECK(nf.diag.det() == doctest::Approx(a.det()).epsilon(1e-10));
        CHECK(nf.symmetric.trace() == doctest::Approx(b.trace()).epsilon(1e-10));
        CHECK(nf.symmetric.det() == doctest::Approx(b.det()).epsilon(1e-8));
        CHECK(nf.symmetric.b == nf.symmetric.c);
        CHECK(det_commutator(nf.diag, nf.symmetric) > 0.0);
        ++done;
    }
}

TEST_CASE("simultaneous normal form gates") {
    CHECK_THROWS_AS(simultaneous_normal_form(Mat2::identity(), Mat2{0, 1, 1, 0}),
                    EigenvalueDegenerate);
    CHECK_THROWS_AS(simultaneous_normal_form(Mat2::diag(1, 2), Mat2::diag(3, 4)),
                    CommutatorNotPositive);
}

TEST_CASE("cubic factorization reproduces the family plane coefficients") {
    const double t = 2.0;
    const auto planes = factor_cubic_preimage(family_cubic(t));
    const auto [al0, be0] = planes[0].to_graph();
    CHECK(std::abs(al0) < 1e-15);
    CHECK(std::abs(be0 - cxd(1, 0)) < 1e-15);

    const double s3 = std::sqrt(3.0);
    const auto [al1, be1] = planes[1].to_graph();
    CHECK(std::abs(al1 - cxd(-3 / (2 * t), s3 / (2 * t))) < 1e-14);
    CHECK(std::abs(be1 - cxd(-0.5, s3 / 2)) < 1e-14);
    const auto [al2, be2] = planes[2].to_graph();
    CHECK(std::abs(al2 - cxd(-3 / (2 * t), -s3 / (2 * t))) < 1e-14);
    CHECK(std::abs(be2 - cxd(-0.5, -s3 / 2)) < 1e-14);
}

TEST_CASE("cubic factorization gates and the pure zbar^3 case") {
    CHECK_THROWS_AS(factor_cubic_preimage({cxd(1, 0), cxd(1, 0), cxd(1, 0)}), NotFactorable);
    try {
        factor_cubic_preimage({cxd(1, 0), cxd(1, 0), cxd(1, 0)});
    } catch (const NotFactorable& e) {
        CHECK(e.residual == doctest::Approx(2.0));
    }

    // a1 = a2 = 0: the planes are w = (cube root of unity) zbar; verified by
    // the pullback residual of w^3 = zbar^3.
    const CubicCoefficients c{cxd(0, 0), cxd(0, 0), cxd(1, 0)};
    const auto planes = factor_cubic_preimage(c);
    CHECK(verify_pullback(c, {planes.begin(), planes.end()}, 200) <= 1e-9);
    const auto [al, be] = planes[1].to_graph();
    CHECK(std::abs(al) < 1e-15);
    CHECK(std::abs(be - std::polar(1.0, 2 * M_PI / 3)) < 1e-14);
}

TEST_CASE("pullback residuals: exact planes pass, perturbed planes fail") {
    const double t = 2.0;
    const auto c = family_cubic(t);
    const auto planes = factor_cubic_preimage(c);
    CHECK(verify_pullback(c, {planes.begin(), planes.end()}, 300) <= 1e-9);

    // w = zbar solves p(z, w) = p(z, zbar) for every cubic.
    const CubicCoefficients any{cxd(0.3, 1.1), cxd(-2, 0.4), cxd(1, 1)};
    CHECK(verify_pullback(any, {TotallyRealPlane::from_graph(cxd(0, 0), cxd(1, 0))}, 300) <= 1e-9);

    const auto [al1, be1] = planes[1].to_graph();
    const auto bad = TotallyRealPlane::from_graph(al1 + cxd(0.01, 0), be1);
    CHECK(verify_pullback(c, {bad}, 300) > 1e-4);
}

TEST_CASE("factorization round-trips on random admissible cubics") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        cxd a3(unif(rng), unif(rng));
        while (std::abs(a3) < 0.1) a3 = cxd(unif(rng), unif(rng));
        const cxd a2(unif(rng), unif(rng));
        const cxd a1 = a2 * a2 / (3.0 * a3);
        const CubicCoefficients c{a1, a2, a3};
        const auto planes = factor_cubic_preimage(c);
        for (const auto& p : planes) CHECK(p.is_totally_real());
        CHECK(verify_pullback(c, {planes.begin(), planes.end()}, 60) <= 1e-9);
    }
}

TEST_CASE("graph and basis forms interconvert") {
    const auto p = TotallyRealPlane::from_graph(cxd(0.3, -1.2), cxd(0.9, 0.4));
    const auto rebuilt = TotallyRealPlane::from_basis(p.u(), p.v());
    const auto [al, be] = rebuilt.to_graph();
    CHECK(std::abs(al - cxd(0.3, -1.2)) < 1e-14);
    CHECK(std::abs(be - cxd(0.9, 0.4)) < 1e-14);
}

TEST_CASE("branch lift vanishes for an unperturbed surface") {
    const auto zero = [](cxd) { return cxd(0, 0); };
    for (int branch : {0, 1, 2})
        CHECK(std::abs(branch_lift(2.0, branch, zero, cxd(0.1, 0.05))) < 1e-15);
}

TEST_CASE("branch lift satisfies its defining cubic") {
    const double t = 2.0;
    const auto F = [](cxd z) { return cxd(std::pow(std::abs(z), 4), 0); };
    const cxd zeta(0.1, 0.0);
    const cxd f = branch_lift(t, 0, F, zeta);
    const cxd s = zeta + t * std::conj(zeta);
    const cxd residual =
        t * t * f * f * f + 3.0 * t * s * f * f + 3.0 * s * s * f - 3.0 * F(zeta);
    CHECK(std::abs(residual) <= 1e-10);
}

TEST_CASE("all three branch lifts land on the perturbed preimage surface") {
    const double t = 2.0;
    const auto F = [](cxd z) { return 0.3 * std::pow(std::abs(z), 4) * z / std::abs(z); };
    const auto c = family_cubic(t);
    const auto planes = family_planes(t);
    const auto p = family_poly(t);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unif(-0.05, 0.05);
    for (int branch = 0; branch < 3; ++branch) {
        const auto [alpha, beta] = planes[static_cast<size_t>(branch)].to_graph();
        for (int k = 0; k < 20; ++k) {
            const cxd zeta(0.05 + std::abs(unif(rng)), unif(rng));
            const cxd lift = branch_lift(t, branch, F, zeta);
            const cxd w = alpha * zeta + beta * std::conj(zeta) + lift;
            const cxd lhs = cubic_lift_eval(c, zeta, w);
            const cxd rhs = p.eval(zeta) + F(zeta);
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("branch lift is o(|zeta|) along a ray") {
    const double t = 2.0;
    const auto F = [](cxd z) { return cxd(std::pow(std::abs(z), 4), 0); };
    double prev_ratio = 1e9;
    for (double r : {1e-2, 1e-3, 1e-4}) {
        const cxd zeta = std::polar(r, M_PI / 7);
        const double ratio = std::abs(branch_lift(t, 0, F, zeta)) / r;
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
    }
}

TEST_CASE("branch lifts are pairwise distinct under a small perturbation") {
    const double t = 1.4;
    const auto F = [](cxd z) { return 0.05 * std::pow(z, 4); };
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unif(-0.1, 0.1);
    for (int k = 0; k < 30; ++k) {
        const cxd zeta(0.05 + std::abs(unif(rng)), unif(rng));
        const auto planes = family_planes(t);
        std::array<cxd, 3> w;
        for (int b = 0; b < 3; ++b) {
            const auto [alpha, beta] = planes[static_cast<size_t>(b)].to_graph();
            w[static_cast<size_t>(b)] =
                alpha * zeta + beta * std::conj(zeta) + branch_lift(t, b, F, zeta);
        }
        CHECK(std::abs(w[0] - w[1]) > 1e-6);
        CHECK(std::abs(w[1] - w[2]) > 1e-6);
        CHECK(std::abs(w[0] - w[2]) > 1e-6);
    }
}

TEST_CASE("branch lift guards") {
    const auto F = [](cxd) { return cxd(10, 0); };
    CHECK_THROWS_AS(branch_lift(2.0, 0, F, cxd(0.01, 0)), BranchUndefined);
    CHECK_THROWS_AS(branch_lift(-1.0, 0, F, cxd(0.1, 0)), InvalidParameter);
    CHECK_THROWS_AS(branch_lift(2.0, 5, F, cxd(0.1, 0)), InvalidParameter);
    // zeta + t conj(zeta) = 0 along the anti-diagonal direction for t = 1 is
    // excluded by the parameter gate; pick t = 2 and the degenerate ray.
    CHECK_THROWS_AS(branch_lift(2.0, 0, [](cxd) { return cxd(0, 0); }, cxd(0, 0)),
                    BranchUndefined);
}
