#include "polyconv/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polyconv/errors.hpp"

namespace polyconv {

cxd poly_eval(const std::vector<cxd>& coeffs, cxd z) {
    cxd acc(0, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cxd> poly_derivative(const std::vector<cxd>& coeffs) {
    std::vector<cxd> out;
    for (size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * static_cast<double>(i));
    if (out.empty()) out.push_back(cxd(0, 0));
    return out;
}

namespace {

double coeff_norm(const std::vector<cxd>& c) {
    double m = 0;
    for (const auto& x : c) m = std::max(m, std::abs(x));
    return m;
}

// Newton polish on an explicit polynomial; quadratic convergence at simple roots.
cxd newton_polish(const std::vector<cxd>& p, cxd z0, int iters = 60) {
    const auto dp = poly_derivative(p);
    cxd z = z0;
    for (int i = 0; i < iters; ++i) {
        const cxd f = poly_eval(p, z);
        const cxd df = poly_eval(dp, z);
        if (std::abs(df) == 0.0) break;
        const cxd step = f / df;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

std::vector<cxd> nth_derivative(std::vector<cxd> p, int n) {
    for (int i = 0; i < n; ++i) p = poly_derivative(p);
    return p;
}

} // namespace

RootSet find_roots(const std::vector<cxd>& coeffs_in, const Tolerances& tol) {
    for (const auto& c : coeffs_in)
        if (!is_finite(c)) throw InvalidInput("find_roots: non-finite coefficient");

    // Trim exact-zero leading coefficients.
    std::vector<cxd> coeffs = coeffs_in;
    while (!coeffs.empty() && coeffs.back() == cxd(0, 0)) coeffs.pop_back();
    if (coeffs.empty()) throw DegenerateInput("find_roots: polynomial is identically zero");

    RootSet out;
    out.degree = static_cast<int>(coeffs.size()) - 1;
    if (out.degree == 0) return out; // nonzero constant, no roots

    // Factor out z^k for vanishing low-order coefficients.
    int zeros_at_origin = 0;
    while (coeffs.size() > 1 && coeffs.front() == cxd(0, 0)) {
        coeffs.erase(coeffs.begin());
        ++zeros_at_origin;
    }
    if (zeros_at_origin > 0) out.roots.push_back({cxd(0, 0), zeros_at_origin});

    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n > 0) {
        // Cauchy bound for the initial circle.
        const double lead = std::abs(coeffs.back());
        double bound = 0;
        for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(coeffs[static_cast<size_t>(i)]) / lead);
        const double radius = 1.0 + bound;

        std::vector<cxd> z(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double ang = 2.0 * M_PI * i / n + 0.4;
            z[static_cast<size_t>(i)] = radius * cxd(std::cos(ang), std::sin(ang));
        }

        const auto dcoeffs = poly_derivative(coeffs);
        for (int iter = 0; iter < tol.aberth_max_iterations; ++iter) {
            double worst = 0;
            for (int i = 0; i < n; ++i) {
                const cxd zi = z[static_cast<size_t>(i)];
                const cxd f = poly_eval(coeffs, zi);
                const cxd df = poly_eval(dcoeffs, zi);
                cxd ratio;
                if (std::abs(df) > 0.0) {
                    ratio = f / df;
                } else {
                    ratio = f == cxd(0, 0) ? cxd(0, 0) : cxd(1e-8, 1e-8);
                }
                cxd sum(0, 0);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    cxd diff = zi - z[static_cast<size_t>(j)];
                    if (std::abs(diff) < 1e-300) diff = cxd(1e-300, 0);
                    sum += cxd(1, 0) / diff;
                }
                const cxd denom = cxd(1, 0) - ratio * sum;
                const cxd step = std::abs(denom) > 1e-300 ? ratio / denom : ratio;
                z[static_cast<size_t>(i)] = zi - step;
                worst = std::max(worst, std::abs(step));
            }
            if (worst <= 1e-14 * (1.0 + radius)) break;
        }

        // Cluster approximate roots; a cluster of size mu is a candidate
        // root of multiplicity mu.
        std::vector<int> cluster(static_cast<size_t>(n), -1);
        int nclusters = 0;
        for (int i = 0; i < n; ++i) {
            if (cluster[static_cast<size_t>(i)] >= 0) continue;
            cluster[static_cast<size_t>(i)] = nclusters;
            for (int j = i + 1; j < n; ++j) {
                if (cluster[static_cast<size_t>(j)] >= 0) continue;
                if (std::abs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]) <= tol.root_cluster_radius)
                    cluster[static_cast<size_t>(j)] = nclusters;
            }
            ++nclusters;
        }

        const double qnorm = coeff_norm(coeffs);
        for (int cidx = 0; cidx < nclusters; ++cidx) {
            std::vector<cxd> members;
            for (int i = 0; i < n; ++i)
                if (cluster[static_cast<size_t>(i)] == cidx) members.push_back(z[static_cast<size_t>(i)]);
            const int mu = static_cast<int>(members.size());
            cxd center = std::accumulate(members.begin(), members.end(), cxd(0, 0)) /
                         static_cast<double>(mu);
            if (mu == 1) {
                out.roots.push_back({newton_polish(coeffs, center), 1});
                continue;
            }
            // Polish a mu-fold root as a simple root of q^{(mu-1)}, then
            // confirm all lower derivatives vanish there.
            const cxd polished = newton_polish(nth_derivative(coeffs, mu - 1), center);
            bool confirmed = true;
            std::vector<cxd> deriv = coeffs;
            for (int i = 0; i < mu; ++i) {
                if (std::abs(poly_eval(deriv, polished)) > tol.root_multiplicity_confirm * qnorm) {
                    confirmed = false;
                    break;
                }
                deriv = poly_derivative(deriv);
            }
            if (confirmed) {
                out.roots.push_back({polished, mu});
            } else {
                for (const auto& m : members) out.roots.push_back({newton_polish(coeffs, m), 1});
            }
        }

        double res = 0;
        for (const auto& r : out.roots)
            if (r.location != cxd(0, 0) || zeros_at_origin == 0)
                res = std::max(res, std::abs(poly_eval(coeffs, r.location)));
        out.residual = res;
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const RootSet::Root& x, const RootSet::Root& y) {
        if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
        return x.location.imag() < y.location.imag();
    });
    return out;
}

} // namespace polyconv
