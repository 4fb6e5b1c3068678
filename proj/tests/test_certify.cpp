#include <doctest.h>

#include <cmath>

#include "polyconv/certify.hpp"
#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"

using namespace polyconv;

TEST_CASE("sum-of-squares certificate for the singular-determinant case") {
    // det A1 = 0, det A2 = 0 >= 0, det[A1, A2] = 1 > 0.
    const Mat2 a1 = Mat2::diag(0, 1);
    const Mat2 a2{1, 1, 1, 1};
    const auto rep = kallin_verify(KallinCase::SumOfSquaresT31, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
    // This pair of planes meets along a line, which the theorem assumes away.
    CHECK(!rep.assumed.empty());
}

TEST_CASE("sum-of-squares certificate at the family's vanishing determinant") {
    const auto [a1, a2] = family_matrices(std::sqrt(3.0));
    const auto rep = kallin_verify(KallinCase::SumOfSquaresT31, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("small-negative-determinant certificate on the family") {
    const auto [a1, a2] = family_matrices(1.5); // det = -0.2
    const auto rep = kallin_verify(KallinCase::SumOfSquaresT32, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("small-negative-determinant certificate at the |det| = 1 boundary") {
    // diag(1, -1) has determinant exactly -1; the zero fiber grows to two
    // line segments and must still verify.
    const Mat2 a1 = Mat2::diag(1, -1);
    const Mat2 a2{-0.2, 0.9, 0.9, 0.3}; // det = -0.87
    REQUIRE(det_commutator(a1, a2) > 0);
    const auto rep = kallin_verify(KallinCase::SumOfSquaresT32, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("product certificate on the family window") {
    const auto [a1, a2] = family_matrices(1.2);
    const auto rep = kallin_verify(KallinCase::ProductZwT33, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("product certificate on a direct instance") {
    const Mat2 a1 = Mat2::diag(2, -0.5);
    const Mat2 a2{1, 2, 2, -1};
    const auto rep = kallin_verify(KallinCase::ProductZwT33, a1, a2, 20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("product certificate rejects a tuple violating the floor condition") {
    // beta <= min floor: the family at t = 1.07 sits below the window.
    const auto [a1, a2] = family_matrices(1.07);
    CHECK_THROWS_AS(kallin_verify(KallinCase::ProductZwT33, a1, a2, 1000, 1.0),
                    HypothesisViolated);
}

TEST_CASE("hypothesis gates name the failing condition") {
    try {
        kallin_verify(KallinCase::SumOfSquaresT31, Mat2::diag(1, 2), Mat2{0, 1, 1, 0}, 100, 1.0);
        CHECK(false);
    } catch (const HypothesisViolated& e) {
        CHECK(e.hypothesis == "det-a1-zero");
    }
    try {
        kallin_verify(KallinCase::SumOfSquaresT32, Mat2::diag(1, -2), Mat2{0.5, 1, 1, -0.5}, 100,
                      1.0);
        CHECK(false);
    } catch (const HypothesisViolated& e) {
        CHECK(e.hypothesis == "det-at-most-one");
    }
}

TEST_CASE("linear certificate for the t = 1 planes") {
    const auto rep = kallin_verify_s1(20000, 1.0);
    CHECK(rep.max_violation <= 1e-9);
    CHECK(rep.zero_fiber_ok);
}

TEST_CASE("violation verdicts are radius invariant on these cone regions") {
    const auto [a1, a2] = family_matrices(1.5);
    const auto r1 = kallin_verify(KallinCase::SumOfSquaresT32, a1, a2, 5000, 0.5);
    const auto r2 = kallin_verify(KallinCase::SumOfSquaresT32, a1, a2, 5000, 1.0);
    const auto r3 = kallin_verify(KallinCase::SumOfSquaresT32, a1, a2, 5000, 2.0);
    const double tol = default_tolerances().kallin_violation;
    CHECK((r1.max_violation <= tol) == (r2.max_violation <= tol));
    CHECK((r2.max_violation <= tol) == (r3.max_violation <= tol));
    CHECK(r1.zero_fiber_ok == r2.zero_fiber_ok);
}

TEST_CASE("doubling the samples never flips a passing report") {
    const auto [a1, a2] = family_matrices(1.2);
    const auto r1 = kallin_verify(KallinCase::ProductZwT33, a1, a2, 10000, 1.0);
    const auto r2 = kallin_verify(KallinCase::ProductZwT33, a1, a2, 20000, 1.0);
    const double tol = default_tolerances().kallin_violation;
    REQUIRE(r1.max_violation <= tol);
    CHECK(r2.max_violation <= tol);
    CHECK(r2.zero_fiber_ok);
}

TEST_CASE("kallin case names round-trip") {
    for (auto c : {KallinCase::SumOfSquaresT31, KallinCase::SumOfSquaresT32,
                   KallinCase::ProductZwT33, KallinCase::LinearS1})
        CHECK(kallin_case_from_string(to_string(c)) == c);
    CHECK_THROWS_AS(kallin_case_from_string("nope"), InvalidParameter);
}
