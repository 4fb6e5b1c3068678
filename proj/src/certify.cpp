#include "polyconv/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "polyconv/convexity.hpp"
#include "polyconv/errors.hpp"
#include "polyconv/family.hpp"
#include "polyconv/parallel.hpp"
#include "polyconv/planes.hpp"

namespace polyconv {

std::string to_string(KallinCase c) {
    switch (c) {
        case KallinCase::SumOfSquaresT31: return "sum_of_squares_t31";
        case KallinCase::SumOfSquaresT32: return "sum_of_squares_t32";
        case KallinCase::ProductZwT33: return "product_zw_t33";
        case KallinCase::LinearS1: return "linear_s1";
    }
    return "unknown";
}

KallinCase kallin_case_from_string(const std::string& s) {
    if (s == "sum_of_squares_t31") return KallinCase::SumOfSquaresT31;
    if (s == "sum_of_squares_t32") return KallinCase::SumOfSquaresT32;
    if (s == "product_zw_t33") return KallinCase::ProductZwT33;
    if (s == "linear_s1") return KallinCase::LinearS1;
    throw InvalidParameter("unknown kallin case: " + s);
}

std::pair<double, double> halton2(unsigned long long index) {
    auto radical_inverse = [](unsigned long long i, unsigned base) {
        double f = 1.0, r = 0.0;
        while (i) {
            f /= base;
            r += f * static_cast<double>(i % base);
            i /= base;
        }
        return r;
    };
    return {radical_inverse(index, 2), radical_inverse(index, 3)};
}

namespace {

struct FiberLine {
    std::array<cxd, 2> direction; // real span in C^2
};

double dist_to_line(const std::array<cxd, 2>& pt, const FiberLine& line) {
    const auto& b = line.direction;
    const double bb = std::norm(b[0]) + std::norm(b[1]);
    if (bb == 0.0) return std::sqrt(std::norm(pt[0]) + std::norm(pt[1]));
    const double pb = pt[0].real() * b[0].real() + pt[0].imag() * b[0].imag() +
                      pt[1].real() * b[1].real() + pt[1].imag() * b[1].imag();
    const double s = pb / bb;
    const cxd r0 = pt[0] - s * b[0];
    const cxd r1 = pt[1] - s * b[1];
    return std::sqrt(std::norm(r0) + std::norm(r1));
}

// One plane of a certificate instance: the parameter-to-point map, the
// polynomial value, the normalized region violation and the declared part
// of the zero fiber on this plane.
struct CertPlane {
    std::function<std::array<cxd, 2>(double, double)> point;
    std::function<cxd(const std::array<cxd, 2>&)> poly;
    std::function<double(cxd)> violation; // takes the normalized value
    std::vector<FiberLine> fiber_lines;   // besides the origin
    int homogeneity = 2;                  // degree for normalization
};

struct SymmetricRegion {
    int sign = 1;        // region lives in {sign * Im >= 0}
    double cone = -1;    // >= 0: Re <= cone * |Im|; < 0: banded trace condition
    double band = 1e-9;  // conditional band for the trace condition
};

double symmetric_violation(cxd v, const SymmetricRegion& reg) {
    const double im = reg.sign * v.imag();
    double viol = std::max(0.0, -im);
    if (reg.cone >= 0.0) {
        viol = std::max(viol, v.real() - reg.cone * std::abs(v.imag()));
    } else if (std::abs(v.imag()) <= reg.band) {
        viol = std::max(viol, v.real());
    }
    return viol;
}

// Directions (x, y) where the quadratic form s1 x^2 + 2 q x y + s2 y^2
// vanishes; empty for a definite form.
std::vector<std::array<double, 2>> form_null_directions(double s1, double q, double s2) {
    std::vector<std::array<double, 2>> dirs;
    const double disc = q * q - s1 * s2;
    if (disc < 0.0) return dirs;
    if (s1 == 0.0 && s2 == 0.0 && q == 0.0) return dirs; // zero form: handled by caller
    if (std::abs(s1) >= std::abs(s2) && s1 != 0.0) {
        const double r = std::sqrt(std::max(0.0, disc));
        dirs.push_back({(-q + r) / s1, 1.0});
        if (r > 0.0) dirs.push_back({(-q - r) / s1, 1.0});
    } else if (s2 != 0.0) {
        const double r = std::sqrt(std::max(0.0, disc));
        dirs.push_back({1.0, (-q + r) / s2});
        if (r > 0.0) dirs.push_back({1.0, (-q - r) / s2});
    } else {
        // s1 = s2 = 0, q != 0: the axes.
        dirs.push_back({1.0, 0.0});
        dirs.push_back({0.0, 1.0});
    }
    for (auto& d : dirs) {
        const double n = std::hypot(d[0], d[1]);
        d[0] /= n;
        d[1] /= n;
    }
    return dirs;
}

std::array<cxd, 2> weinstock_plane_point(const Mat2& m, double x, double y) {
    const auto mx = m.apply(x, y);
    return {cxd(mx[0], x), cxd(mx[1], y)};
}

cxd sum_of_squares(const std::array<cxd, 2>& p) { return p[0] * p[0] + p[1] * p[1]; }
cxd product_zw(const std::array<cxd, 2>& p) { return p[0] * p[1]; }

void require(bool ok, const std::string& hypothesis, const std::string& detail) {
    if (!ok) throw HypothesisViolated(hypothesis, detail);
}

// Weinstock gates shared by the matrix cases. The (P1, P2) pair can fail to
// be transverse (the singular-determinant case); the theorem then assumes
// the pairwise union convex, which is recorded instead of checked.
void check_pairwise(const Mat2& a1, const Mat2& a2, const Tolerances& tol,
                    std::vector<std::string>& assumed) {
    require(weinstock_pair_check(a1, tol).status == Status::LocallyPolynomiallyConvex,
            "pairwise-weinstock-a1", "pair (P0, P1) fails or sits on the modulus-1 edge");
    require(weinstock_pair_check(a2, tol).status == Status::LocallyPolynomiallyConvex,
            "pairwise-weinstock-a2", "pair (P0, P2) fails or sits on the modulus-1 edge");
    try {
        const Mat2 b = pairwise_reduction(a1, a2, tol);
        require(weinstock_pair_check(b, tol).status == Status::LocallyPolynomiallyConvex,
                "pairwise-weinstock-reduced", "pair (P1, P2) fails or sits on the modulus-1 edge");
    } catch (const NotTransverse&) {
        assumed.push_back("pair (P1, P2) meets along a line; its union is assumed convex");
    }
}

struct SampleScan {
    double max_violation = 0;
    double worst_fiber_distance = 0;
};

SampleScan scan(const std::vector<CertPlane>& planes, int samples, double ball_radius,
                unsigned seed, const Tolerances& tol, bool parallel) {
    std::vector<double> viol(static_cast<size_t>(samples), 0.0);
    std::vector<double> fiber(static_cast<size_t>(samples), 0.0);
    auto body = [&](std::ptrdiff_t i) {
        const auto [u1, u2] = halton2(static_cast<unsigned long long>(i) + 1 + seed);
        const double r = ball_radius * std::sqrt(u1);
        const double phi = 2.0 * M_PI * u2;
        const double x = r * std::cos(phi), y = r * std::sin(phi);
        const double r2 = x * x + y * y;
        if (r2 == 0.0) return;
        double worst_v = 0, worst_f = 0;
        for (const auto& plane : planes) {
            const auto pt = plane.point(x, y);
            const cxd value = plane.poly(pt);
            const double norm = plane.homogeneity == 1 ? std::sqrt(r2) : r2;
            worst_v = std::max(worst_v, plane.violation(value / norm));
            if (std::abs(value) <= tol.kallin_zero_fiber_value) {
                double d = std::sqrt(std::norm(pt[0]) + std::norm(pt[1])); // to the origin
                for (const auto& line : plane.fiber_lines)
                    d = std::min(d, dist_to_line(pt, line));
                worst_f = std::max(worst_f, d);
            }
        }
        viol[static_cast<size_t>(i)] = worst_v;
        fiber[static_cast<size_t>(i)] = worst_f;
    };
    if (parallel)
        parallel_for_index(samples, body);
    else
        serial_for_index(samples, body);
    SampleScan out;
    for (int i = 0; i < samples; ++i) {
        out.max_violation = std::max(out.max_violation, viol[static_cast<size_t>(i)]);
        out.worst_fiber_distance = std::max(out.worst_fiber_distance, fiber[static_cast<size_t>(i)]);
    }
    return out;
}

// Region and fiber data for a plane (S + iI)R^2 under z^2 + w^2, where S is
// symmetric (the diagonal factor included). Encodes the sign analysis of
// the sum-of-squares proofs.
CertPlane sum_of_squares_plane(const Mat2& s, const Tolerances& tol) {
    CertPlane plane;
    plane.point = [s](double x, double y) { return weinstock_plane_point(s, x, y); };
    plane.poly = sum_of_squares;

    const double det = s.det(), tr = s.trace();
    // Im p = 2 (s1 x^2 + 2 q x y + s2 y^2); Re p has the form matrix below.
    const Mat2 im_form{2 * s.a, 2 * s.b, 2 * s.b, 2 * s.d};
    const Mat2 re_form{s.a * s.a + s.b * s.b - 1, (s.a + s.d) * s.b,
                       (s.a + s.d) * s.b, s.d * s.d + s.b * s.b - 1};

    SymmetricRegion reg;
    reg.band = tol.kallin_violation;
    if (det > tol.hypothesis_zero_band) {
        reg.sign = tr > 0 ? 1 : -1;
        const auto [i1, i2] = im_form.spectrum();
        const double m = std::min(reg.sign * i1.real(), reg.sign * i2.real());
        const auto [r1, r2] = re_form.spectrum();
        const double M = std::max(std::abs(r1.real()), std::abs(r2.real()));
        require(m > 0.0, "imaginary-part-definite", "Im p is not definite on the plane");
        reg.cone = M / m;
    } else {
        // Semidefinite or indefinite imaginary part: banded trace condition.
        reg.sign = std::abs(det) <= tol.hypothesis_zero_band ? (tr >= 0 ? 1 : -1) : 0;
        reg.cone = -1;
    }
    if (reg.sign == 0) {
        // Indefinite: only the trace condition constrains the image.
        plane.violation = [reg](cxd v) {
            return std::abs(v.imag()) <= reg.band ? std::max(0.0, v.real()) : 0.0;
        };
    } else {
        plane.violation = [reg](cxd v) { return symmetric_violation(v, reg); };
    }

    // The fiber gains a line for every Im-null direction on which Re also
    // vanishes (the |det| = 1 boundary of the small-determinant case).
    for (const auto& d : form_null_directions(s.a, s.b, s.d)) {
        const double re = re_form.a * d[0] * d[0] + 2 * re_form.b * d[0] * d[1] +
                          re_form.d * d[1] * d[1];
        if (std::abs(re) <= 1e-9)
            plane.fiber_lines.push_back({weinstock_plane_point(s, d[0], d[1])});
    }
    return plane;
}

CertPlane base_plane_positive_ray() {
    CertPlane plane;
    plane.point = [](double x, double y) { return std::array<cxd, 2>{cxd(x, 0), cxd(y, 0)}; };
    plane.poly = sum_of_squares;
    plane.violation = [](cxd v) {
        return std::max(std::abs(v.imag()), std::max(0.0, -v.real()));
    };
    return plane;
}

} // namespace

namespace {

KallinReport kallin_matrix_case(KallinCase c, const Mat2& a1, const Mat2& a2, int samples,
                                double ball_radius, const Tolerances& tol, bool parallel) {
    if (samples <= 0 || !(ball_radius > 0))
        throw InvalidParameter("kallin_verify: need positive samples and ball radius");
    if (!a1.finite() || !a2.finite()) throw InvalidInput("kallin_verify: non-finite matrix");

    KallinReport rep;
    rep.case_id = c;
    rep.samples = samples;
    rep.ball_radius = ball_radius;
    rep.seed = tol.default_seed;

    Mat2 m1 = a1, m2 = a2;
    const double zero = tol.hypothesis_zero_band;

    switch (c) {
        case KallinCase::SumOfSquaresT31: {
            if (std::abs(m1.det()) > zero && std::abs(m2.det()) <= zero) std::swap(m1, m2);
            require(std::abs(m1.det()) <= zero, "det-a1-zero", "neither determinant vanishes");
            require(m2.det() >= -zero, "det-a2-nonnegative", "det A2 < 0");
            require(det_commutator(m1, m2) > zero, "commutator-positive", "det[A1, A2] <= 0");
            require(std::abs(m1.trace()) > tol.eigen_discriminant, "distinct-eigenvalues",
                    "A1 with det 0 needs nonzero trace for the normal form");
            break;
        }
        case KallinCase::SumOfSquaresT32: {
            for (const Mat2* m : {&m1, &m2}) {
                require(m->det() < -zero, "det-negative", "det Aj must be negative");
                require(std::abs(m->det()) <= 1.0 + tol.kallin_violation, "det-at-most-one",
                        "|det Aj| > 1");
            }
            require(det_commutator(m1, m2) > zero, "commutator-positive", "det[A1, A2] <= 0");
            break;
        }
        case KallinCase::ProductZwT33: {
            for (const Mat2* m : {&m1, &m2})
                require(m->det() < -zero, "det-negative", "det Aj must be negative");
            require(det_commutator(m1, m2) > zero, "commutator-positive", "det[A1, A2] <= 0");
            const double beta = beta_invariant(m1, m2);
            const double floor12 = m2.det() * m1.trace() * m1.trace();
            const double floor21 = m1.det() * m2.trace() * m2.trace();
            require(beta > std::min(floor12, floor21), "beta-exceeds-floor",
                    "beta(A1, A2) does not exceed the mixed floor");
            if (!(beta > floor12)) std::swap(m1, m2); // lead with the diagonalized role
            break;
        }
        case KallinCase::LinearS1:
            throw InvalidParameter("kallin_verify: the t = 1 case takes no matrices");
    }

    check_pairwise(m1, m2, tol, rep.assumed);

    const SimultaneousNormalForm nf = simultaneous_normal_form(m1, m2, tol);
    const Mat2 d = nf.diag, s = nf.symmetric;

    std::vector<CertPlane> planes;
    planes.push_back(base_plane_positive_ray());

    if (c == KallinCase::ProductZwT33) {
        // F = zw. K0 lands in R; K1 on a line through 0; K2 misses R - {0}.
        planes[0].poly = product_zw;
        planes[0].violation = [](cxd v) { return std::abs(v.imag()); };
        planes[0].fiber_lines = {{std::array<cxd, 2>{cxd(1, 0), cxd(0, 0)}},
                                 {std::array<cxd, 2>{cxd(0, 0), cxd(1, 0)}}};

        const double l1 = d.a, l2 = d.d;
        require(std::abs(l1 + l2) > zero, "separating-line-distinct",
                "tr A1 = 0 collapses the image line onto the real axis");
        cxd dir(l1 * l2 - 1.0, l1 + l2);
        dir /= std::abs(dir);
        CertPlane k1;
        k1.point = [d](double x, double y) { return weinstock_plane_point(d, x, y); };
        k1.poly = product_zw;
        k1.violation = [dir](cxd v) {
            return std::abs(v.real() * dir.imag() - v.imag() * dir.real());
        };
        k1.fiber_lines = {{weinstock_plane_point(d, 1, 0)}, {weinstock_plane_point(d, 0, 1)}};
        planes.push_back(k1);

        // Im p on K2 is the form q x^2 + (s1 + s2) x y + q y^2.
        const double q = s.b, tr = s.a + s.d;
        const Mat2 im_form{q, tr / 2, tr / 2, q};
        const auto [e1, e2] = im_form.spectrum();
        const int sign = q > 0 ? 1 : -1;
        const double m = std::min(sign * e1.real(), sign * e2.real());
        require(m > 0.0, "imaginary-part-definite",
                "q^2 <= ((s1 + s2)/2)^2: Im p vanishes off the origin");
        CertPlane k2;
        k2.point = [s](double x, double y) { return weinstock_plane_point(s, x, y); };
        k2.poly = product_zw;
        k2.violation = [sign, m](cxd v) { return std::max(0.0, m - sign * v.imag()); };
        planes.push_back(k2);
    } else {
        planes.push_back(sum_of_squares_plane(d, tol));
        planes.push_back(sum_of_squares_plane(s, tol));
    }

    const SampleScan sc = scan(planes, samples, ball_radius, rep.seed, tol, parallel);
    rep.max_violation = sc.max_violation;
    rep.zero_fiber_ok = sc.worst_fiber_distance <= tol.kallin_zero_fiber_distance;
    return rep;
}

KallinReport kallin_s1_case(int samples, double ball_radius, const Tolerances& tol,
                            bool parallel) {
    if (samples <= 0 || !(ball_radius > 0))
        throw InvalidParameter("kallin_verify: need positive samples and ball radius");
    KallinReport rep;
    rep.case_id = KallinCase::LinearS1;
    rep.samples = samples;
    rep.ball_radius = ball_radius;
    rep.seed = tol.default_seed;
    rep.assumed.push_back(
        "pairwise unions of the t = 1 planes are convex (they meet along a real line)");

    const auto raw = family_planes(1.0, tol);
    // Linear change (z, w) -> (z + w, i(z - w)); F is the first coordinate.
    auto transformed_basis = [&](const TotallyRealPlane& p) {
        auto map = [](const std::array<cxd, 2>& v) {
            return std::array<cxd, 2>{v[0] + v[1], cxd(0, 1) * (v[0] - v[1])};
        };
        return std::make_pair(map(p.u()), map(p.v()));
    };

    std::vector<CertPlane> planes;
    std::vector<cxd> directions;
    for (const auto& p : raw) {
        const auto [tu, tv] = transformed_basis(p);
        // F(K) = x (u0') + y (v0'); the v-component must vanish for the
        // image to be a line.
        require(std::abs(tv[0]) <= 1e-9 * std::max(1.0, std::abs(tu[0])), "image-is-a-line",
                "the transformed plane does not map into a line under F");
        cxd dir = tu[0] / std::abs(tu[0]);
        directions.push_back(dir);
        CertPlane plane;
        plane.homogeneity = 1;
        plane.point = [tu, tv](double x, double y) {
            return std::array<cxd, 2>{x * tu[0] + y * tv[0], x * tu[1] + y * tv[1]};
        };
        plane.poly = [](const std::array<cxd, 2>& pt) { return pt[0]; };
        plane.violation = [dir](cxd v) {
            return std::abs(v.real() * dir.imag() - v.imag() * dir.real());
        };
        // F vanishes on the x = 0 parameter line of each plane.
        plane.fiber_lines = {{std::array<cxd, 2>{tv[0], tv[1]}}};
        planes.push_back(plane);
    }
    for (size_t i = 0; i < directions.size(); ++i)
        for (size_t j = i + 1; j < directions.size(); ++j)
            require(std::abs(directions[i].real() * directions[j].imag() -
                             directions[i].imag() * directions[j].real()) > 1e-9,
                    "lines-distinct", "two image lines coincide");

    const SampleScan sc = scan(planes, samples, ball_radius, rep.seed, tol, parallel);
    rep.max_violation = sc.max_violation;
    rep.zero_fiber_ok = sc.worst_fiber_distance <= tol.kallin_zero_fiber_distance;
    return rep;
}

} // namespace

KallinReport kallin_verify(KallinCase c, const Mat2& a1, const Mat2& a2, int samples,
                           double ball_radius, const Tolerances& tol) {
    return kallin_matrix_case(c, a1, a2, samples, ball_radius, tol, true);
}

KallinReport kallin_verify_serial(KallinCase c, const Mat2& a1, const Mat2& a2, int samples,
                                  double ball_radius, const Tolerances& tol) {
    return kallin_matrix_case(c, a1, a2, samples, ball_radius, tol, false);
}

KallinReport kallin_verify_s1(int samples, double ball_radius, const Tolerances& tol) {
    return kallin_s1_case(samples, ball_radius, tol, true);
}

KallinReport kallin_verify_s1_serial(int samples, double ball_radius, const Tolerances& tol) {
    return kallin_s1_case(samples, ball_radius, tol, false);
}

} // namespace polyconv
