#include "polyconv/hermitian_poly.hpp"

#include <algorithm>
#include <cmath>

#include "polyconv/errors.hpp"

namespace polyconv {

namespace {
constexpr double kPruneEps = 0.0; // exact-zero coefficients are dropped

void check_coeff(cxd c) {
    if (!is_finite(c)) throw InvalidInput("HermitianPoly: non-finite coefficient");
}
} // namespace

cxd pow_int(cxd z, int k) {
    if (k == 0) return cxd(1.0, 0.0);
    const bool neg = k < 0;
    unsigned e = neg ? static_cast<unsigned>(-(long long)k) : static_cast<unsigned>(k);
    cxd base = z, acc(1.0, 0.0);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return neg ? cxd(1.0, 0.0) / acc : acc;
}

void HermitianPoly::set(int m, int n, cxd coeff) {
    if (m < 0 || n < 0) throw InvalidInput("HermitianPoly: negative exponent");
    check_coeff(coeff);
    if (std::abs(coeff) <= kPruneEps) {
        terms_.erase({m, n});
    } else {
        terms_[{m, n}] = coeff;
    }
    recompute_degree();
}

void HermitianPoly::add(int m, int n, cxd coeff) {
    set(m, n, this->coeff(m, n) + coeff);
}

cxd HermitianPoly::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? cxd(0, 0) : it->second;
}

void HermitianPoly::recompute_degree() {
    degree_ = 0;
    for (const auto& [k, c] : terms_) degree_ = std::max(degree_, k.first + k.second);
}

bool HermitianPoly::homogeneous() const {
    for (const auto& [k, c] : terms_)
        if (k.first + k.second != degree_) return false;
    return true;
}

cxd HermitianPoly::eval(cxd z) const {
    if (!is_finite(z)) throw InvalidInput("HermitianPoly::eval: non-finite argument");
    const cxd zb = std::conj(z);
    cxd acc(0, 0);
    for (const auto& [k, c] : terms_) acc += c * pow_int(z, k.first) * pow_int(zb, k.second);
    return acc;
}

HermitianPoly HermitianPoly::operator+(const HermitianPoly& o) const {
    HermitianPoly out = *this;
    for (const auto& [k, c] : o.terms_) out.add(k.first, k.second, c);
    return out;
}

HermitianPoly HermitianPoly::scaled(cxd s) const {
    HermitianPoly out;
    for (const auto& [k, c] : terms_) out.set(k.first, k.second, c * s);
    return out;
}

HermitianPoly wirtinger_dbar(const HermitianPoly& p) {
    HermitianPoly out;
    for (const auto& [k, c] : p.terms()) {
        const auto [m, n] = k;
        if (n == 0) continue;
        out.add(m, n - 1, c * static_cast<double>(n));
    }
    return out;
}

std::vector<cxd> substitute_zbar_one(const HermitianPoly& p) {
    int max_m = 0;
    for (const auto& [k, c] : p.terms()) max_m = std::max(max_m, k.first);
    std::vector<cxd> coeffs(static_cast<size_t>(max_m) + 1, cxd(0, 0));
    for (const auto& [k, c] : p.terms()) coeffs[static_cast<size_t>(k.first)] += c;
    while (coeffs.size() > 1 && coeffs.back() == cxd(0, 0)) coeffs.pop_back();
    return coeffs;
}

void LaurentExpr::add(int m, int n, cxd coeff) {
    check_coeff(coeff);
    auto it = terms_.find({m, n});
    cxd next = coeff + (it == terms_.end() ? cxd(0, 0) : it->second);
    if (next == cxd(0, 0)) {
        if (it != terms_.end()) terms_.erase(it);
    } else {
        terms_[{m, n}] = next;
    }
}

cxd LaurentExpr::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? cxd(0, 0) : it->second;
}

cxd LaurentExpr::eval(cxd z) const {
    if (!is_finite(z)) throw InvalidInput("LaurentExpr::eval: non-finite argument");
    const cxd zb = std::conj(z);
    cxd acc(0, 0);
    for (const auto& [k, c] : terms_) {
        if ((k.first < 0 || k.second < 0) && z == cxd(0, 0))
            throw InvalidInput("LaurentExpr::eval: negative power at z = 0");
        acc += c * pow_int(z, k.first) * pow_int(zb, k.second);
    }
    return acc;
}

LaurentExpr LaurentExpr::mixed_derivative() const {
    LaurentExpr out;
    for (const auto& [k, c] : terms_) {
        const auto [m, n] = k;
        if (m == 0 || n == 0) continue;
        out.add(m - 1, n - 1, c * static_cast<double>(m) * static_cast<double>(n));
    }
    return out;
}

} // namespace polyconv
