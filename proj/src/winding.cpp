#include "polyconv/winding.hpp"

#include <cmath>

#include "polyconv/errors.hpp"

namespace polyconv {

int winding_number(const std::vector<cxd>& samples, const Tolerances& tol) {
    if (samples.size() < 3) throw InvalidInput("winding_number: need at least 3 samples");
    for (const auto& s : samples) {
        if (!is_finite(s)) throw InvalidInput("winding_number: non-finite sample");
        if (std::abs(s) < tol.curve_origin_guard)
            throw CurveThroughOrigin("winding_number: sample within origin guard");
    }
    double total = 0;
    const size_t n = samples.size();
    for (size_t i = 0; i < n; ++i) {
        const cxd a = samples[i];
        const cxd b = samples[(i + 1) % n];
        const double inc = std::arg(b / a);
        if (std::abs(inc) >= M_PI - 1e-12)
            throw UndersampledCurve("winding_number: angular increment reached pi");
        total += inc;
    }
    const double w = total / (2.0 * M_PI);
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.25)
        throw UndersampledCurve("winding_number: total argument change is not near a multiple of 2 pi");
    return static_cast<int>(rounded);
}

} // namespace polyconv
