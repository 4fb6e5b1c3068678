#ifndef POLYCONV_HERMITIAN_POLY_HPP
#define POLYCONV_HERMITIAN_POLY_HPP

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "polyconv/matrix2.hpp"
#include "polyconv/tolerances.hpp"

namespace polyconv {

// Polynomial in z and conj(z): sum of c_{m,n} z^m zbar^n with m, n >= 0.
class HermitianPoly {
public:
    using Key = std::pair<int, int>; // (power of z, power of zbar)

    HermitianPoly() = default;

    void set(int m, int n, cxd coeff);
    void add(int m, int n, cxd coeff);
    cxd coeff(int m, int n) const;

    const std::map<Key, cxd>& terms() const { return terms_; }
    int degree() const { return degree_; } // max m+n over stored terms, 0 if empty
    bool empty() const { return terms_.empty(); }
    bool homogeneous() const;

    // z^m means repeated multiplication; degrees here are small.
    cxd eval(cxd z) const;

    HermitianPoly operator+(const HermitianPoly& o) const;
    HermitianPoly scaled(cxd s) const;

private:
    std::map<Key, cxd> terms_;
    int degree_ = 0;
    void recompute_degree();
};

// d/d(zbar): c z^m zbar^n -> c n z^m zbar^{n-1}; holomorphic terms vanish.
HermitianPoly wirtinger_dbar(const HermitianPoly& p);

// Coefficients of q(z) = p(z, 1), low order first (substitutes zbar -> 1).
std::vector<cxd> substitute_zbar_one(const HermitianPoly& p);

// Finite Laurent expression: sum of c_{m,n} z^m zbar^n, m or n may be negative.
class LaurentExpr {
public:
    using Key = std::pair<int, int>;

    void add(int m, int n, cxd coeff);
    cxd coeff(int m, int n) const;
    const std::map<Key, cxd>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    cxd eval(cxd z) const; // z must be nonzero when negative powers are present

    // term-wise d^2/dz dzbar: c z^m zbar^n -> c m n z^{m-1} zbar^{n-1}
    LaurentExpr mixed_derivative() const;

private:
    std::map<Key, cxd> terms_;
};

cxd pow_int(cxd z, int k); // integer power, negative allowed (z != 0)

} // namespace polyconv

#endif
