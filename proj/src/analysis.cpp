#include "polyconv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "polyconv/errors.hpp"
#include "polyconv/parallel.hpp"
#include "polyconv/roots.hpp"
#include "polyconv/winding.hpp"

namespace polyconv {

namespace {

double poly_coeff_scale(const HermitianPoly& p) {
    double m = 0;
    for (const auto& [k, c] : p.terms()) m = std::max(m, std::abs(c));
    return m;
}

// dp/dzbar must vanish only at the origin; for homogeneous p its zero set
// is a union of rays, so sampling the unit circle decides.
void require_isolated_singularity(const HermitianPoly& dbar, const Tolerances& tol) {
    const double scale = poly_coeff_scale(dbar);
    if (scale == 0.0) throw DegenerateInput("maslov index: dp/dzbar is identically zero");
    double min_abs = std::numeric_limits<double>::infinity();
    const int n = 2048;
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * M_PI * i / n;
        min_abs = std::min(min_abs, std::abs(dbar.eval(std::polar(1.0, th))));
    }
    if (min_abs <= tol.singularity_circle_floor * scale)
        throw NotIsolatedSingularity("maslov index: dp/dzbar vanishes away from the origin");
}

} // namespace

int maslov_index_algebraic(const HermitianPoly& p, const Tolerances& tol) {
    if (p.empty()) throw DegenerateInput("maslov_index_algebraic: empty polynomial");
    if (!p.homogeneous())
        throw InvalidParameter("maslov_index_algebraic: polynomial must be homogeneous");
    const int k = p.degree();
    const HermitianPoly dbar = wirtinger_dbar(p);
    require_isolated_singularity(dbar, tol);

    const std::vector<cxd> q = substitute_zbar_one(dbar);
    const RootSet roots = find_roots(q, tol);
    int inside = 0;
    for (const auto& r : roots.roots) {
        const double radius = std::abs(r.location);
        if (std::abs(radius - 1.0) < tol.maslov_circle_margin)
            throw RootOnCircle("maslov_index_algebraic: root of q too close to the unit circle");
        if (radius < 1.0) inside += r.multiplicity;
    }
    return 2 * inside - (k - 1);
}

int maslov_index_winding(const HermitianPoly& p, double radius, int samples,
                         const Tolerances& tol) {
    if (!(radius > 0.0)) throw InvalidParameter("maslov_index_winding: radius must be positive");
    if (samples < 8) throw InvalidParameter("maslov_index_winding: too few samples");
    const HermitianPoly dbar = wirtinger_dbar(p);
    std::vector<cxd> curve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i)
        curve[static_cast<size_t>(i)] = dbar.eval(std::polar(radius, 2.0 * M_PI * i / samples));
    return winding_number(curve, tol);
}

LaurentExpr laplacian_symbolic(const HermitianPoly& p, int j) {
    if (j < 1) throw InvalidParameter("laplacian_symbolic: j must be >= 1");
    // Re(p / z^{j-1}) = (p z^{-(j-1)} + conj(p) zbar^{-(j-1)}) / 2.
    LaurentExpr phi;
    for (const auto& [k, c] : p.terms()) {
        phi.add(k.first - (j - 1), k.second, c / 2.0);
        phi.add(k.second, k.first - (j - 1), std::conj(c) / 2.0);
    }
    return phi.mixed_derivative();
}

void evaluate_polar_grid(const LaurentExpr& expr, const std::vector<double>& radii, int angles,
                         std::vector<cxd>& values) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(radii.size()) * angles;
    values.assign(static_cast<size_t>(n), cxd(0, 0));
    parallel_for_index(n, [&](std::ptrdiff_t idx) {
        const size_t ri = static_cast<size_t>(idx) / static_cast<size_t>(angles);
        const int ai = static_cast<int>(static_cast<size_t>(idx) % static_cast<size_t>(angles));
        const double th = 2.0 * M_PI * ai / angles;
        values[static_cast<size_t>(idx)] = expr.eval(std::polar(radii[ri], th));
    });
}

void evaluate_polar_grid_serial(const LaurentExpr& expr, const std::vector<double>& radii,
                                int angles, std::vector<cxd>& values) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(radii.size()) * angles;
    values.assign(static_cast<size_t>(n), cxd(0, 0));
    serial_for_index(n, [&](std::ptrdiff_t idx) {
        const size_t ri = static_cast<size_t>(idx) / static_cast<size_t>(angles);
        const int ai = static_cast<int>(static_cast<size_t>(idx) % static_cast<size_t>(angles));
        const double th = 2.0 * M_PI * ai / angles;
        values[static_cast<size_t>(idx)] = expr.eval(std::polar(radii[ri], th));
    });
}

SubharmonicityReport subharmonicity_check(const HermitianPoly& p, int j,
                                          const std::vector<double>& radii, int angles,
                                          const Tolerances& tol) {
    if (radii.empty() || angles < 36)
        throw InvalidParameter("subharmonicity_check: need radii and at least 36 angles");
    for (double r : radii)
        if (!(r > 0.0)) throw InvalidParameter("subharmonicity_check: radii must be positive");

    SubharmonicityReport rep;
    rep.laplacian = laplacian_symbolic(p, j);
    rep.radii_count = static_cast<int>(radii.size());
    rep.angle_count = angles;

    std::vector<cxd> values;
    evaluate_polar_grid(rep.laplacian, radii, angles, values);

    double min_re = std::numeric_limits<double>::infinity();
    double max_im = 0;
    for (const auto& v : values) {
        min_re = std::min(min_re, v.real());
        max_im = std::max(max_im, std::abs(v.imag()));
    }
    rep.min_on_annulus = min_re;
    rep.max_imag_residue = max_im;
    rep.subharmonic = min_re >= -tol.subharmonic_floor;

    // Nowhere harmonic: in every angular window of width pi/18, at every
    // radius, the Laplacian must rise above +excess somewhere.
    const int window = std::max(1, static_cast<int>(std::ceil(angles / 36.0)));
    bool nowhere = true;
    for (size_t ri = 0; ri < radii.size() && nowhere; ++ri) {
        for (int a0 = 0; a0 < angles && nowhere; ++a0) {
            double wmax = -std::numeric_limits<double>::infinity();
            for (int off = 0; off <= window; ++off) {
                const int ai = (a0 + off) % angles;
                wmax = std::max(wmax,
                                values[ri * static_cast<size_t>(angles) +
                                       static_cast<size_t>(ai)].real());
            }
            if (!(wmax > tol.harmonic_window_excess)) nowhere = false;
        }
    }
    rep.nowhere_harmonic = nowhere;

    // Finite-difference audit of the symbolic route at random grid points.
    auto phi = [&](cxd z) { return (p.eval(z) / pow_int(z, j - 1)).real(); };
    std::mt19937 rng(tol.default_seed);
    std::uniform_int_distribution<size_t> pick_r(0, radii.size() - 1);
    std::uniform_int_distribution<int> pick_a(0, angles - 1);
    double worst = 0;
    for (int s = 0; s < 100; ++s) {
        const double r = radii[pick_r(rng)];
        const double th = 2.0 * M_PI * pick_a(rng) / angles;
        const cxd z = std::polar(r, th);
        const double h = tol.fd_step_scale * r;
        const double fd = (phi(z + cxd(h, 0)) + phi(z - cxd(h, 0)) + phi(z + cxd(0, h)) +
                           phi(z - cxd(0, h)) - 4.0 * phi(z)) /
                          (h * h);
        const double sym = 4.0 * rep.laplacian.eval(z).real();
        worst = std::max(worst, std::abs(fd - sym) / std::max(1.0, std::abs(sym)));
    }
    rep.fd_max_rel_err = worst;
    return rep;
}

namespace {

// Fourier form of the boundary curve of a homogeneous polynomial:
// C(theta) = sum_n f_n e^{-2 i n theta} with f_n = coeff(k - n, n).
struct BoundaryCurve {
    std::vector<cxd> f;
    cxd value(double theta) const {
        cxd acc(0, 0);
        for (size_t n = 0; n < f.size(); ++n)
            acc += f[n] * std::polar(1.0, -2.0 * static_cast<double>(n) * theta);
        return acc;
    }
    cxd derivative(double theta) const {
        cxd acc(0, 0);
        for (size_t n = 0; n < f.size(); ++n)
            acc += f[n] * cxd(0, -2.0 * static_cast<double>(n)) *
                   std::polar(1.0, -2.0 * static_cast<double>(n) * theta);
        return acc;
    }
};

BoundaryCurve boundary_curve(const HermitianPoly& p) {
    const int k = p.degree();
    BoundaryCurve c;
    c.f.assign(static_cast<size_t>(k) + 1, cxd(0, 0));
    for (const auto& [key, coeff] : p.terms()) c.f[static_cast<size_t>(key.second)] = coeff;
    return c;
}

double wrap_angle(double th) {
    th = std::fmod(th, 2.0 * M_PI);
    if (th < 0) th += 2.0 * M_PI;
    return th;
}

double circ_dist(double a, double b) {
    const double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, 2.0 * M_PI - d);
}

} // namespace

void sample_curve(const HermitianPoly& p, int n, std::vector<cxd>& values) {
    const BoundaryCurve c = boundary_curve(p);
    values.assign(static_cast<size_t>(n), cxd(0, 0));
    parallel_for_index(n, [&](std::ptrdiff_t i) {
        values[static_cast<size_t>(i)] = c.value(2.0 * M_PI * static_cast<double>(i) / n);
    });
}

void sample_curve_serial(const HermitianPoly& p, int n, std::vector<cxd>& values) {
    const BoundaryCurve c = boundary_curve(p);
    values.assign(static_cast<size_t>(n), cxd(0, 0));
    serial_for_index(n, [&](std::ptrdiff_t i) {
        values[static_cast<size_t>(i)] = c.value(2.0 * M_PI * static_cast<double>(i) / n);
    });
}

CurveAnalysis curve_analysis(const HermitianPoly& p, int j, int samples, const Tolerances& tol) {
    if (!p.homogeneous() || p.empty())
        throw InvalidParameter("curve_analysis: polynomial must be homogeneous and nonzero");
    const int k = p.degree();
    if (!(k > j && j >= 1)) throw InvalidParameter("curve_analysis: need k > j >= 1");
    if (samples < 64) throw InvalidParameter("curve_analysis: too few samples");

    CurveAnalysis out;
    out.k = k;
    out.j = j;
    out.samples = samples;
    out.threshold_arc = M_PI / (k - j + 1);

    const BoundaryCurve curve = boundary_curve(p);
    std::vector<cxd> values;
    sample_curve(p, samples, values);

    double lo_re = values[0].real(), hi_re = lo_re, lo_im = values[0].imag(), hi_im = lo_im;
    double scale = 0;
    for (const auto& v : values) {
        lo_re = std::min(lo_re, v.real());
        hi_re = std::max(hi_re, v.real());
        lo_im = std::min(lo_im, v.imag());
        hi_im = std::max(hi_im, v.imag());
        scale = std::max(scale, std::abs(v));
    }
    const double diam = std::hypot(hi_re - lo_re, hi_im - lo_im);
    if (diam <= 1e-12 * std::max(1.0, scale))
        throw DegenerateInput("curve_analysis: boundary curve is constant");
    const double cell = 10.0 * diam / samples;

    // Spatial hash of the sampled values.
    std::map<std::pair<long, long>, std::vector<int>> buckets;
    auto cell_of = [&](cxd v) {
        return std::make_pair(static_cast<long>(std::floor(v.real() / cell)),
                              static_cast<long>(std::floor(v.imag() / cell)));
    };
    for (int i = 0; i < samples; ++i) buckets[cell_of(values[static_cast<size_t>(i)])].push_back(i);

    // Newton refinement of a candidate pair; the antipodal family sits on a
    // zero manifold where the Jacobian degenerates, so a 1-d bisection
    // fallback along the hash cell handles that case.
    auto refine = [&](double th1, double th2, double& r1, double& r2, double& residual) {
        for (int it = 0; it < 60; ++it) {
            const cxd H = curve.value(th1) - curve.value(th2);
            residual = std::abs(H);
            if (residual <= tol.coincidence_newton_residual * std::max(1.0, scale)) break;
            const cxd d1 = curve.derivative(th1);
            const cxd d2 = curve.derivative(th2);
            const double det = d1.real() * (-d2.imag()) - (-d2.real()) * d1.imag();
            const double jscale = (std::abs(d1) + std::abs(d2)) * (std::abs(d1) + std::abs(d2));
            if (std::abs(det) <= tol.coincidence_jacobian_min * std::max(1.0, jscale)) {
                // Fallback: keep the angle difference, scan one cell width.
                const double gap = th2 - th1;
                double best_s = th1, best = residual;
                const double span = 4.0 * M_PI / samples;
                for (int g = -64; g <= 64; ++g) {
                    const double s = th1 + span * g / 64.0;
                    const double v = std::abs(curve.value(s) - curve.value(s + gap));
                    if (v < best) {
                        best = v;
                        best_s = s;
                    }
                }
                th1 = best_s;
                th2 = best_s + gap;
                residual = best;
                break;
            }
            const double s1 = (H.real() * (-d2.imag()) - (-d2.real()) * H.imag()) / det;
            const double s2 = (d1.real() * H.imag() - H.real() * d1.imag()) / det;
            th1 -= s1;
            th2 -= s2;
        }
        residual = std::abs(curve.value(th1) - curve.value(th2));
        r1 = wrap_angle(th1);
        r2 = wrap_angle(th2);
    };

    std::vector<CurveAnalysis::Coincidence> found;
    auto already_recorded = [&](double t1, double t2) {
        for (const auto& c : found) {
            if ((circ_dist(c.theta1, t1) < tol.coincidence_dedupe &&
                 circ_dist(c.theta2, t2) < tol.coincidence_dedupe) ||
                (circ_dist(c.theta1, t2) < tol.coincidence_dedupe &&
                 circ_dist(c.theta2, t1) < tol.coincidence_dedupe))
                return true;
        }
        return false;
    };

    for (const auto& [key, members] : buckets) {
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                auto it = buckets.find({key.first + dx, key.second + dy});
                if (it == buckets.end()) continue;
                for (int i : members) {
                    for (int jdx : it->second) {
                        if (jdx <= i) continue;
                        const double th1 = 2.0 * M_PI * i / samples;
                        const double th2 = 2.0 * M_PI * jdx / samples;
                        if (std::abs(values[static_cast<size_t>(i)] -
                                     values[static_cast<size_t>(jdx)]) > 2.0 * cell)
                            continue;
                        double r1, r2, residual;
                        refine(th1, th2, r1, r2, residual);
                        if (circ_dist(r1, r2) < tol.coincidence_dedupe) continue; // diagonal
                        const bool tight =
                            residual <= tol.coincidence_newton_residual * std::max(1.0, scale);
                        const bool loose = residual <= 1e-6 * std::max(1.0, scale);
                        if (!tight && !loose) continue;
                        double a = std::min(r1, r2), b = std::max(r1, r2);
                        if (already_recorded(a, b)) continue;
                        found.push_back({a, b, tight});
                    }
                }
            }
        }
    }

    // Two genuinely different coincidence angles inside one hash cell can
    // not be told apart at this resolution.
    const double min_separation = 2.0 * M_PI / samples;
    for (size_t a = 0; a < found.size(); ++a) {
        for (size_t b = a + 1; b < found.size(); ++b) {
            const double d = std::min(circ_dist(found[a].theta1, found[b].theta1),
                                      circ_dist(found[a].theta1, found[b].theta2));
            if (d > tol.coincidence_dedupe && d < min_separation)
                throw Undersampled("curve_analysis: distinct coincidences collide within one cell");
        }
    }

    out.coincidence_pairs = found;
    double min_gap = M_PI;
    for (const auto& c : found) min_gap = std::min(min_gap, circ_dist(c.theta1, c.theta2));
    out.min_arc_gap = min_gap;
    out.property_star_star = min_gap >= out.threshold_arc - tol.arc_gap_slack;
    return out;
}

double preimage_constraint(double t, double psi, int branch) {
    if (!(t > 0.0)) throw InvalidParameter("preimage_constraint: t must be positive");
    if (branch == 0) return 3.0 / t + 3.0 * std::cos(2.0 * psi - M_PI / 3.0) -
                            std::sqrt(3.0) * std::sin(2.0 * psi - M_PI / 3.0);
    if (branch == 1) return 3.0 / t + 3.0 * std::cos(2.0 * psi + M_PI / 3.0) +
                            std::sqrt(3.0) * std::sin(2.0 * psi + M_PI / 3.0);
    throw InvalidParameter("preimage_constraint: branch must be 0 or 1");
}

namespace {

std::pair<cxd, cxd> quartic_lambdas(double t, double psi) {
    const cxd e = std::polar(1.0, 2.0 * psi);
    const cxd common = -(3.0 / (2.0 * t)) * (cxd(1, 0) + (t / 3.0) * e);
    const cxd split = (std::sqrt(3.0) / (2.0 * t)) * cxd(0, 1) * (cxd(1, 0) + t * e);
    return {common + split, common - split};
}

void check_preimage_domain(double t, double psi) {
    if (!is_finite(t) || !is_finite(psi) || t < 0.0 || t >= 1.0)
        throw InvalidParameter("preimage_count: t must lie in [0, 1)");
}

} // namespace

int preimage_count(double t, double psi, const Tolerances& tol) {
    check_preimage_domain(t, psi);
    if (t <= 1e-12) return 2; // only +-a: the quartic factor is absent
    const auto [l1, l2] = quartic_lambdas(t, psi);
    int count = 2;
    if (std::abs(std::sqrt(std::abs(l1)) - 1.0) <= tol.circle_modulus_band) count += 2;
    if (std::abs(std::sqrt(std::abs(l2)) - 1.0) <= tol.circle_modulus_band) count += 2;
    return count;
}

int preimage_count_bruteforce(double t, double psi, const Tolerances& tol) {
    check_preimage_domain(t, psi);
    const cxd a = std::polar(1.0, psi);
    const cxd a2 = a * a;
    const cxd ga = a2 + t * a2 * a2 + (t * t / 3.0) * a2 * a2 * a2;
    const std::vector<cxd> coeffs{-ga,           cxd(0, 0), cxd(1, 0), cxd(0, 0),
                                  cxd(t, 0),     cxd(0, 0), cxd(t * t / 3.0, 0)};
    const RootSet roots = find_roots(coeffs, tol);
    int count = 0;
    for (const auto& r : roots.roots)
        if (std::abs(std::abs(r.location) - 1.0) <= tol.circle_modulus_band) ++count;
    return count;
}

namespace {

double constraint_min_over_psi(double t, int branch) {
    // Coarse scan plus golden-section refinement around the best cell.
    const int n = 720;
    double best = std::numeric_limits<double>::infinity(), best_psi = 0;
    for (int i = 0; i < n; ++i) {
        const double psi = M_PI * i / n; // period pi in psi
        const double v = preimage_constraint(t, psi, branch);
        if (v < best) {
            best = v;
            best_psi = psi;
        }
    }
    double lo = best_psi - M_PI / n, hi = best_psi + M_PI / n;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = preimage_constraint(t, x1, branch), f2 = preimage_constraint(t, x2, branch);
    for (int it = 0; it < 200; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = preimage_constraint(t, x1, branch);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = preimage_constraint(t, x2, branch);
        }
    }
    return std::min(f1, f2);
}

} // namespace

double min_preimage_threshold(const Tolerances& tol) {
    (void)tol;
    auto exists_extra = [&](double t) {
        return std::min(constraint_min_over_psi(t, 0), constraint_min_over_psi(t, 1)) <= 0.0;
    };
    double lo = 0.5, hi = 0.999;
    if (exists_extra(lo) || !exists_extra(hi))
        throw DegenerateInput("min_preimage_threshold: bracketing failed");
    for (int it = 0; it < 80; ++it) {
        const double mid = (lo + hi) / 2.0;
        (exists_extra(mid) ? hi : lo) = mid;
    }
    return (lo + hi) / 2.0;
}

std::vector<double> preimage_constraint_zeros(double t, int branch, const Tolerances& tol) {
    std::vector<double> zeros;
    const int n = 4096;
    auto h = [&](double psi) { return preimage_constraint(t, psi, branch); };
    double prev = h(0.0);
    for (int i = 1; i <= n; ++i) {
        const double psi = M_PI * i / n;
        const double cur = h(psi);
        if (prev == 0.0) zeros.push_back(M_PI * (i - 1) / n);
        if (prev * cur < 0.0) {
            double lo = M_PI * (i - 1) / n, hi = psi;
            for (int it = 0; it < 100; ++it) {
                const double mid = (lo + hi) / 2.0;
                (h(lo) * h(mid) <= 0.0 ? hi : lo) = mid;
            }
            zeros.push_back((lo + hi) / 2.0);
        } else if (i >= 2) {
            // Tangential zero: local minimum whose value is ~0 without a
            // sign change.
            const double mid_psi = M_PI * (i - 1) / n;
            const double mid = prev;
            const double before = h(M_PI * (i - 2) / n);
            if (mid < before && mid < cur && std::abs(mid) <= 1e-6) {
                double lo = M_PI * (i - 2) / n, hi = psi;
                const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
                double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
                for (int it = 0; it < 120; ++it) {
                    if (h(x1) < h(x2)) {
                        hi = x2;
                        x2 = x1;
                        x1 = hi - gr * (hi - lo);
                    } else {
                        lo = x1;
                        x1 = x2;
                        x2 = lo + gr * (hi - lo);
                    }
                }
                (void)mid_psi;
                zeros.push_back((lo + hi) / 2.0);
            }
        }
        prev = cur;
    }
    std::sort(zeros.begin(), zeros.end());
    std::vector<double> dedup;
    for (double z : zeros)
        if (dedup.empty() || std::abs(z - dedup.back()) > tol.coincidence_dedupe) dedup.push_back(z);
    // Wrap-around duplicates at the period boundary collapse to one report.
    while (dedup.size() > 1 && std::abs(dedup.back() - M_PI - dedup.front()) <= tol.coincidence_dedupe)
        dedup.pop_back();
    return dedup;
}

} // namespace polyconv
