#include <doctest.h>

#include <cmath>
#include <random>

#include "polyconv/analysis.hpp"
#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"

using namespace polyconv;

TEST_CASE("algebraic index of the family and of simple monomials") {
    CHECK(maslov_index_algebraic(family_poly(0.5)) == 2);
    CHECK(maslov_index_algebraic(family_poly(2.0)) == -2);

    HermitianPoly z2zb;
    z2zb.set(2, 1, cxd(1, 0)); // q = z^2, double root at 0
    CHECK(maslov_index_algebraic(z2zb) == 2);

    HermitianPoly zb3;
    zb3.set(0, 3, cxd(1, 0)); // q = 3, no roots
    CHECK(maslov_index_algebraic(zb3) == -2);
}

TEST_CASE("winding index agrees on the family and on zbar^2") {
    CHECK(maslov_index_winding(family_poly(0.5), 1.0, 4096) == 2);
    CHECK(maslov_index_winding(family_poly(2.0), 1.0, 4096) == -2);

    HermitianPoly zb2;
    zb2.set(0, 2, cxd(1, 0));
    CHECK(maslov_index_winding(zb2, 1.0, 1024) == -1);
    CHECK(maslov_index_algebraic(zb2) == -1);
}

TEST_CASE("winding index is radius independent on homogeneous input") {
    for (double r : {0.5, 1.0, 2.0}) CHECK(maslov_index_winding(family_poly(0.7), r, 4096) == 2);
    for (double r : {0.5, 1.0, 2.0}) CHECK(maslov_index_winding(family_poly(3.0), r, 4096) == -2);
}

TEST_CASE("index guards") {
    // t = 1 puts the double root of q on the unit circle.
    CHECK_THROWS_AS(maslov_index_algebraic(family_poly(1.0)), RootOnCircle);

    // (z + zbar)^2 has a zbar-derivative vanishing on a line.
    HermitianPoly line;
    line.set(2, 0, cxd(1, 0));
    line.set(1, 1, cxd(2, 0));
    line.set(0, 2, cxd(1, 0));
    CHECK_THROWS_AS(maslov_index_algebraic(line), NotIsolatedSingularity);

    // Non-homogeneous input is rejected.
    HermitianPoly mixed;
    mixed.set(1, 1, cxd(1, 0));
    mixed.set(0, 3, cxd(1, 0));
    CHECK_THROWS_AS(maslov_index_algebraic(mixed), InvalidParameter);
}

TEST_CASE("the two index routes agree on random admissible polynomials") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(2, 5);
    int done = 0;
    while (done < 100) {
        const int k = deg(rng);
        HermitianPoly p;
        for (int n = 0; n <= k; ++n) p.set(k - n, n, cxd(coeff(rng), coeff(rng)));
        try {
            const int algebraic = maslov_index_algebraic(p);
            const int winding = maslov_index_winding(p, 1.0, 8192);
            CHECK(algebraic == winding);
            ++done;
        } catch (const Error&) {
            // Rejection sampling: roots too close to the circle or a
            // non-isolated singularity.
        }
    }
}

TEST_CASE("symbolic Laplacian of the family matches the closed form") {
    const double t = 0.8;
    const LaurentExpr lap = laplacian_symbolic(family_poly(t), 2);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unif(0.2, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const cxd z = std::polar(unif(rng), 2 * M_PI * unif(rng));
        const cxd v = lap.eval(z);
        const cxd ratio = z * z / (std::conj(z) * std::conj(z));
        const double expected = 1.0 - t * t * ratio.real();
        CHECK(std::abs(v.real() - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
        CHECK(std::abs(v.imag()) <= 1e-12);
    }
}

TEST_CASE("symbolic Laplacian degenerate cases") {
    HermitianPoly holo;
    holo.set(2, 0, cxd(1, 0));
    CHECK(laplacian_symbolic(holo, 1).empty());

    HermitianPoly zzb;
    zzb.set(1, 1, cxd(1, 0));
    const LaurentExpr lap = laplacian_symbolic(zzb, 1);
    CHECK(std::abs(lap.eval(cxd(0.3, 0.7)) - cxd(1, 0)) < 1e-15);
}

TEST_CASE("subharmonicity verdicts across the family") {
    const std::vector<double> radii{0.5, 1.0, 1.5, 2.0};
    {
        const auto rep = subharmonicity_check(family_poly(0.9), 2, radii, 720);
        CHECK(rep.subharmonic);
        CHECK(rep.nowhere_harmonic);
        CHECK(rep.min_on_annulus == doctest::Approx(1.0 - 0.81).epsilon(1e-6));
        CHECK(rep.fd_max_rel_err <= 1e-4);
        CHECK(rep.max_imag_residue <= 1e-10);
    }
    {
        const auto rep = subharmonicity_check(family_poly(1.5), 2, radii, 720);
        CHECK(!rep.subharmonic);
        CHECK(rep.min_on_annulus == doctest::Approx(1.0 - 2.25).epsilon(1e-6));
    }
    {
        // Harmonic graph: Re(z^2) has vanishing Laplacian.
        HermitianPoly z2;
        z2.set(2, 0, cxd(1, 0));
        const auto rep = subharmonicity_check(z2, 1, radii, 720);
        CHECK(rep.subharmonic);
        CHECK(!rep.nowhere_harmonic);
    }
}

TEST_CASE("curve analysis sees only antipodal coincidences below the threshold") {
    const auto res = curve_analysis(family_poly(0.5), 2, 4096);
    CHECK(res.threshold_arc == doctest::Approx(M_PI / 2));
    CHECK(res.min_arc_gap == doctest::Approx(M_PI).epsilon(1e-9));
    CHECK(res.property_star_star);
    CHECK(!res.coincidence_pairs.empty());
    for (const auto& c : res.coincidence_pairs)
        CHECK(std::abs(std::abs(c.theta1 - c.theta2) - M_PI) < 1e-9);
}

TEST_CASE("curve analysis finds the extra coincidences above the threshold") {
    const auto res = curve_analysis(family_poly(0.95), 2, 4096);
    CHECK(!res.property_star_star);
    CHECK(res.min_arc_gap < M_PI / 2);
    CHECK(res.min_arc_gap > 0.01);
}

TEST_CASE("curve analysis on the pure z^2 zbar graph") {
    HermitianPoly p;
    p.set(2, 1, cxd(1, 0));
    const auto res = curve_analysis(p, 2, 2048);
    CHECK(res.property_star_star);
    CHECK(res.min_arc_gap == doctest::Approx(M_PI).epsilon(1e-9));
}

TEST_CASE("preimage counts in the two-point regime") {
    for (double psi : {0.0, 0.7, 2.1, 5.5}) {
        CHECK(preimage_count(0.5, psi) == 2);
        CHECK(preimage_count(0.0, psi) == 2);
    }
}

TEST_CASE("preimage count reaches four above the threshold") {
    // Any zero of the branch constraint gives an extra unit-modulus pair.
    const double t = 0.95;
    const auto zeros = preimage_constraint_zeros(t, 0);
    REQUIRE(!zeros.empty());
    CHECK(preimage_count(t, zeros.front()) >= 4);
    CHECK(preimage_count_bruteforce(t, zeros.front()) >= 4);
}

TEST_CASE("closed-form and brute-force preimage counts agree on a coarse grid") {
    for (int i = 0; i < 12; ++i) {
        for (int k = 0; k < 16; ++k) {
            const double t = 0.99 * i / 11.0;
            const double psi = 2 * M_PI * k / 16.0;
            CAPTURE(t);
            CAPTURE(psi);
            CHECK(preimage_count(t, psi) == preimage_count_bruteforce(t, psi));
        }
    }
}

TEST_CASE("preimage domain guard") {
    CHECK_THROWS_AS(preimage_count(1.0, 0.0), InvalidParameter);
    CHECK_THROWS_AS(preimage_count(-0.1, 0.0), InvalidParameter);
}

TEST_CASE("threshold of the extra-preimage transition") {
    const double t = min_preimage_threshold();
    CHECK(std::abs(t - std::sqrt(3.0) / 2.0) <= 1e-9);
}

TEST_CASE("the constraint oscillation bottoms out at -2 sqrt(3)") {
    // min over x of 3 cos x - sqrt(3) sin x, via the constraint at 3/t = 0+.
    double best = 1e9;
    for (int i = 0; i < 400000; ++i) {
        const double x = 2 * M_PI * i / 400000;
        best = std::min(best, 3 * std::cos(x) - std::sqrt(3.0) * std::sin(x));
    }
    CHECK(best == doctest::Approx(-2 * std::sqrt(3.0)).epsilon(1e-8));
}

TEST_CASE("tangential constraint zero at the threshold is unique per half period") {
    const auto zeros = preimage_constraint_zeros(std::sqrt(3.0) / 2.0, 0);
    CHECK(zeros.size() == 1);
}
