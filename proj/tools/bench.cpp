// Timing comparison of the OpenMP kernels against their serial reference
// twins: polar-grid Laplacian evaluation, boundary-curve sampling,
// certificate sampling and the classification sweep.

#include <cstdio>
#include <vector>

#ifdef POLYCONV_HAVE_OPENMP
#include <omp.h>
#endif

#include <chrono>

#include "polyconv/analysis.hpp"
#include "polyconv/certify.hpp"
#include "polyconv/convexity.hpp"
#include "polyconv/family.hpp"
#include "polyconv/parallel.hpp"

namespace pc = polyconv;

namespace {

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct Row {
    const char* name;
    double serial_s;
    double parallel_s;
};

void print(const Row& r) {
    std::printf("%-24s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx\n", r.name,
                r.serial_s * 1e3, r.parallel_s * 1e3,
                r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0);
}

} // namespace

int main() {
    std::printf("threads: %d\n", pc::parallel_thread_count());

    {
        const auto lap = pc::laplacian_symbolic(pc::family_poly(0.9), 2);
        std::vector<double> radii;
        for (int i = 0; i < 256; ++i) radii.push_back(0.5 + i * 0.005);
        std::vector<pc::cxd> a, b;
        double t0 = now_seconds();
        pc::evaluate_polar_grid_serial(lap, radii, 4096, a);
        double t1 = now_seconds();
        pc::evaluate_polar_grid(lap, radii, 4096, b);
        double t2 = now_seconds();
        if (a != b) std::printf("polar grid MISMATCH\n");
        print({"polar grid 256x4096", t1 - t0, t2 - t1});
    }

    {
        const auto p = pc::family_poly(0.95);
        std::vector<pc::cxd> a, b;
        double t0 = now_seconds();
        pc::sample_curve_serial(p, 1 << 20, a);
        double t1 = now_seconds();
        pc::sample_curve(p, 1 << 20, b);
        double t2 = now_seconds();
        if (a != b) std::printf("curve sampling MISMATCH\n");
        print({"curve samples 2^20", t1 - t0, t2 - t1});
    }

    {
        const auto [a1, a2] = pc::family_matrices(1.5);
        double t0 = now_seconds();
        const auto r1 =
            pc::kallin_verify_serial(pc::KallinCase::SumOfSquaresT32, a1, a2, 1000000, 1.0);
        double t1 = now_seconds();
        const auto r2 = pc::kallin_verify(pc::KallinCase::SumOfSquaresT32, a1, a2, 1000000, 1.0);
        double t2 = now_seconds();
        if (r1.max_violation != r2.max_violation) std::printf("kallin MISMATCH\n");
        print({"kallin scan 1e6", t1 - t0, t2 - t1});
    }

    {
        std::vector<double> ts;
        for (int i = 0; i < 20000; ++i) ts.push_back(0.2 + 2.0 * i / 20000.0);
        std::vector<int> a(ts.size()), b(ts.size());
        double t0 = now_seconds();
        pc::serial_for_index(static_cast<std::ptrdiff_t>(ts.size()), [&](std::ptrdiff_t i) {
            a[static_cast<size_t>(i)] =
                static_cast<int>(pc::classify_cubic_surface(ts[static_cast<size_t>(i)]).verdict.status);
        });
        double t1 = now_seconds();
        pc::parallel_for_index(static_cast<std::ptrdiff_t>(ts.size()), [&](std::ptrdiff_t i) {
            b[static_cast<size_t>(i)] =
                static_cast<int>(pc::classify_cubic_surface(ts[static_cast<size_t>(i)]).verdict.status);
        });
        double t2 = now_seconds();
        if (a != b) std::printf("sweep MISMATCH\n");
        print({"classify sweep 2e4", t1 - t0, t2 - t1});
    }
    return 0;
}
