#include "polyconv/planes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "polyconv/errors.hpp"

namespace polyconv {

CMat2 CMat2::inverse() const {
    const cxd dt = det();
    if (std::abs(dt) == 0.0) throw DegenerateInput("CMat2::inverse: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

TotallyRealPlane TotallyRealPlane::from_graph(cxd alpha, cxd beta) {
    if (!is_finite(alpha) || !is_finite(beta))
        throw InvalidInput("TotallyRealPlane: non-finite graph coefficient");
    TotallyRealPlane p;
    // z = 1 and z = i trace out a real basis of the graph w = alpha z + beta zbar.
    p.u_ = {cxd(1, 0), alpha + beta};
    p.v_ = {cxd(0, 1), cxd(0, 1) * (alpha - beta)};
    p.graph_ = std::make_pair(alpha, beta);
    return p;
}

TotallyRealPlane TotallyRealPlane::from_basis(const std::array<cxd, 2>& u,
                                              const std::array<cxd, 2>& v) {
    for (const auto& c : {u[0], u[1], v[0], v[1]})
        if (!is_finite(c)) throw InvalidInput("TotallyRealPlane: non-finite basis entry");
    TotallyRealPlane p;
    p.u_ = u;
    p.v_ = v;
    return p;
}

namespace {
double norm2(const std::array<cxd, 2>& v) {
    return std::sqrt(std::norm(v[0]) + std::norm(v[1]));
}
} // namespace

double TotallyRealPlane::totally_real_margin() const {
    const double nu = norm2(u_), nv = norm2(v_);
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return std::abs(u_[0] * v_[1] - u_[1] * v_[0]) / (nu * nv);
}

bool TotallyRealPlane::is_totally_real(const Tolerances& tol) const {
    return totally_real_margin() > tol.totally_real_det;
}

std::array<cxd, 2> TotallyRealPlane::point(double x, double y) const {
    return {x * u_[0] + y * v_[0], x * u_[1] + y * v_[1]};
}

std::pair<cxd, cxd> TotallyRealPlane::to_graph(const Tolerances& tol) const {
    if (graph_) return *graph_;
    // Solve alpha z_j + beta conj(z_j) = w_j for the two basis vectors.
    const cxd z1 = u_[0], w1 = u_[1], z2 = v_[0], w2 = v_[1];
    const cxd det = z1 * std::conj(z2) - z2 * std::conj(z1);
    const double scale = std::max(std::abs(z1), std::abs(z2));
    if (std::abs(det) <= tol.transverse_det * std::max(1.0, scale * scale))
        throw DegenerateInput("TotallyRealPlane::to_graph: plane is not a graph over the z-axis");
    const cxd alpha = (w1 * std::conj(z2) - w2 * std::conj(z1)) / det;
    const cxd beta = (z1 * w2 - z2 * w1) / det;
    return {alpha, beta};
}

WeinstockForm weinstock_normal_form(const TotallyRealPlane& p0,
                                    const std::vector<TotallyRealPlane>& others,
                                    const Tolerances& tol) {
    if (!p0.is_totally_real(tol))
        throw NotTotallyReal("weinstock_normal_form: base plane is not totally real");
    for (size_t j = 0; j < others.size(); ++j)
        if (!others[j].is_totally_real(tol))
            throw NotTotallyReal("weinstock_normal_form: plane " + std::to_string(j + 1) +
                                 " is not totally real");

    // L maps the base plane's basis to (e1, e2), hence p0 to R^2.
    const CMat2 basis{p0.u()[0], p0.v()[0], p0.u()[1], p0.v()[1]};
    const CMat2 L = basis.inverse();

    WeinstockForm out;
    out.map = L;
    for (size_t j = 0; j < others.size(); ++j) {
        const auto a = L.apply(others[j].u());
        const auto b = L.apply(others[j].v());
        const double scale = std::max({1.0, std::abs(a[0]), std::abs(a[1]), std::abs(b[0]),
                                       std::abs(b[1])});
        const Mat2 imag{a[0].imag(), b[0].imag(), a[1].imag(), b[1].imag()};
        const Mat2 real{a[0].real(), b[0].real(), a[1].real(), b[1].real()};
        // A singular imaginary-part map means the image plane meets R^2,
        // i.e. P_j and P_0 are not transverse.
        if (std::abs(imag.det()) < tol.transverse_det * scale * scale)
            throw NotTransverse("weinstock_normal_form: plane " + std::to_string(j + 1) +
                                " meets the base plane away from 0");
        out.matrices.push_back(real * imag.inverse());
    }
    return out;
}

Mat2 pairwise_reduction(const Mat2& a1, const Mat2& a2, const Tolerances& tol) {
    if (!a1.finite() || !a2.finite()) throw InvalidInput("pairwise_reduction: non-finite matrix");
    const Mat2 diff = a1 - a2;
    if (std::abs(diff.det()) < tol.transverse_det)
        throw NotTransverse("pairwise_reduction: A1 - A2 is singular");
    return (a1 * a2 + Mat2::identity()) * diff.inverse();
}

SimultaneousNormalForm simultaneous_normal_form(const Mat2& a, const Mat2& b,
                                                const Tolerances& tol) {
    if (!a.finite() || !b.finite())
        throw InvalidInput("simultaneous_normal_form: non-finite matrix");
    const double disc = a.trace() * a.trace() - 4.0 * a.det();
    if (disc <= tol.eigen_discriminant)
        throw EigenvalueDegenerate("simultaneous_normal_form: matrix lacks two distinct real eigenvalues");
    if (det_commutator(a, b) <= 0.0)
        throw CommutatorNotPositive("simultaneous_normal_form: det[a, b] <= 0");

    const double s = std::sqrt(disc);
    const double l1 = (a.trace() + s) / 2.0, l2 = (a.trace() - s) / 2.0;

    // Eigenvector for each eigenvalue; pick the better-conditioned formula.
    auto eigvec = [&](double lam) -> std::array<double, 2> {
        const double r1 = std::hypot(a.b, lam - a.a);
        const double r2 = std::hypot(lam - a.d, a.c);
        if (r1 >= r2) return {a.b, lam - a.a};
        return {lam - a.d, a.c};
    };
    const auto v1 = eigvec(l1), v2 = eigvec(l2);
    const Mat2 V{v1[0], v2[0], v1[1], v2[1]};
    const Mat2 T0 = V.inverse();
    const Mat2 bprime = T0 * b * V;

    // det[a, b] = (l1 - l2)^2 b'_{12} b'_{21} > 0 forces the product of the
    // off-diagonals positive, so the rescaling is real.
    const double ratio = bprime.c / bprime.b;
    if (!(ratio > 0.0))
        throw CommutatorNotPositive("simultaneous_normal_form: off-diagonal product not positive");
    const double d = std::sqrt(ratio);
    const Mat2 D = Mat2::diag(d, 1.0);
    const Mat2 T = D * T0;
    const Mat2 Tinv = V * Mat2::diag(1.0 / d, 1.0);

    SimultaneousNormalForm out;
    out.transform = T;
    out.diag = T * a * Tinv;
    out.symmetric = T * b * Tinv;
    // Scrub roundoff in the structurally exact entries.
    out.diag.b = out.diag.c = 0.0;
    const double q = (out.symmetric.b + out.symmetric.c) / 2.0;
    out.symmetric.b = out.symmetric.c = q;
    return out;
}

cxd cubic_lift_eval(const CubicCoefficients& c, cxd z, cxd w) {
    return c.a3 * w * w * w + c.a2 * z * w * w + c.a1 * z * z * w;
}

std::array<TotallyRealPlane, 3> factor_cubic_preimage(const CubicCoefficients& c,
                                                      const Tolerances& tol) {
    for (const auto& a : {c.a1, c.a2, c.a3})
        if (!is_finite(a)) throw InvalidInput("factor_cubic_preimage: non-finite coefficient");
    const double residual = std::abs(c.a2 * c.a2 - 3.0 * c.a1 * c.a3);
    const double scale = std::max({std::abs(c.a2) * std::abs(c.a2),
                                   std::abs(c.a1 * c.a3), 1.0});
    if (std::abs(c.a3) <= tol.cubic_leading_min)
        throw NotFactorable("factor_cubic_preimage: a3 vanishes", residual);
    if (residual > tol.factorability_rel * scale)
        throw NotFactorable("factor_cubic_preimage: a2^2 != 3 a1 a3", residual);

    const cxd ratio = c.a2 / c.a3;
    const cxd omega = std::polar(1.0, 2.0 * M_PI / 3.0);
    const cxd e_m = std::polar(1.0, -M_PI / 6.0);
    const cxd e_p = std::polar(1.0, M_PI / 6.0);
    const cxd s3 = cxd(std::sqrt(3.0), 0.0);

    return {TotallyRealPlane::from_graph(cxd(0, 0), cxd(1, 0)),
            TotallyRealPlane::from_graph(-(e_m * ratio) / s3, omega),
            TotallyRealPlane::from_graph(-(e_p * ratio) / s3, std::conj(omega))};
}

double verify_pullback(const CubicCoefficients& c,
                       const std::vector<TotallyRealPlane>& planes, int samples,
                       const Tolerances& tol) {
    if (samples <= 0) throw InvalidParameter("verify_pullback: samples must be positive");
    std::mt19937 rng(tol.default_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 0.0;
    for (const auto& plane : planes) {
        const auto [alpha, beta] = plane.to_graph(tol);
        for (int i = 0; i < samples; ++i) {
            const double r = std::sqrt(unit(rng));
            const double th = 2.0 * M_PI * unit(rng);
            const cxd z = std::polar(r, th);
            const cxd w = alpha * z + beta * std::conj(z);
            const cxd lhs = cubic_lift_eval(c, z, w);
            const cxd rhs = cubic_lift_eval(c, z, std::conj(z));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

cxd branch_lift(double t, int branch, const std::function<cxd(cxd)>& F, cxd zeta,
                const Tolerances& tol) {
    if (!(t > 0.0) || std::abs(t - 1.0) <= tol.branch_parameter_band)
        throw InvalidParameter("branch_lift: t must lie in (0,1) or (1,inf)");
    if (branch < 0 || branch > 2) throw InvalidParameter("branch_lift: branch must be 0, 1 or 2");
    if (!is_finite(zeta)) throw InvalidInput("branch_lift: non-finite zeta");

    const cxd s = zeta + t * std::conj(zeta);
    if (std::abs(s) == 0.0) throw BranchUndefined("branch_lift: zeta + t conj(zeta) vanishes");
    const cxd Fz = F(zeta);
    if (!is_finite(Fz)) throw InvalidInput("branch_lift: perturbation returned non-finite value");
    const cxd eps = 3.0 * t * Fz / (s * s * s);
    if (!(std::abs(eps) < 1.0))
        throw BranchUndefined("branch_lift: |3 t F / (zeta + t conj zeta)^3| >= 1");

    const cxd unity = std::polar(1.0, 2.0 * M_PI * branch / 3.0);
    const cxd root = std::pow(cxd(1, 0) + eps, 1.0 / 3.0); // principal branch
    return unity * s * (root - cxd(1, 0)) / t;
}

double subspace_distance(const TotallyRealPlane& p, const TotallyRealPlane& q) {
    // Orthonormalize each real basis inside R^4 and compare projections via
    // the singular values of Q_p^T Q_q.
    auto to_r4 = [](const std::array<cxd, 2>& v) {
        return std::array<double, 4>{v[0].real(), v[0].imag(), v[1].real(), v[1].imag()};
    };
    auto dot = [](const std::array<double, 4>& x, const std::array<double, 4>& y) {
        return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
    };
    auto orthonormal = [&](const TotallyRealPlane& pl) {
        auto e1 = to_r4(pl.u());
        auto e2 = to_r4(pl.v());
        const double n1 = std::sqrt(dot(e1, e1));
        for (auto& x : e1) x /= n1;
        const double proj = dot(e1, e2);
        for (int i = 0; i < 4; ++i) e2[static_cast<size_t>(i)] -= proj * e1[static_cast<size_t>(i)];
        const double n2 = std::sqrt(dot(e2, e2));
        for (auto& x : e2) x /= n2;
        return std::array<std::array<double, 4>, 2>{e1, e2};
    };
    const auto P = orthonormal(p);
    const auto Q = orthonormal(q);
    // Residual of each basis vector after projecting onto the other span;
    // subtracting the projection directly avoids the cancellation a
    // cos-based principal-angle formula would suffer near zero distance.
    double worst = 0.0;
    for (const auto& pair : {std::make_pair(&P, &Q), std::make_pair(&Q, &P)}) {
        for (const auto& v : *pair.second) {
            std::array<double, 4> r = v;
            for (const auto& e : *pair.first) {
                const double c = dot(e, v);
                for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] -= c * e[static_cast<size_t>(i)];
            }
            worst = std::max(worst, std::sqrt(std::max(0.0, dot(r, r))));
        }
    }
    return worst;
}

} // namespace polyconv
