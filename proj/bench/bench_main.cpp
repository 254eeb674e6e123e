// Timing comparison between the serial reference kernels and the
// OpenMP-parallel production kernels, plus the agreement between them.
//
//   gflat-bench [N] [time-samples]
//
// Defaults: N = 200, 64 time samples.  Thread count follows
// OMP_NUM_THREADS.

#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "gflat/propagator.hpp"
#include "gflat/spectral.hpp"
#include "gflat/states.hpp"

using namespace gflat;

namespace {

template <typename F>
double timed(F&& body) {
    const double t0 = omp_get_wtime();
    body();
    return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 200;
    const int samples = argc > 2 ? std::atoi(argv[2]) : 64;
    if (n < 2 || samples < 1) {
        std::fprintf(stderr, "usage: gflat-bench [N >= 2] [time-samples >= 1]\n");
        return 2;
    }
    std::printf("lattice size %d, %d time samples, %d OpenMP threads\n", n, samples,
                omp_get_max_threads());

    const auto decomp = eigen_decompose(LatticeSpec{n});
    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i) times[i] = 0.11 * (i + 1);

    // Propagator series: serial reference vs parallel kernel.
    double worst_prop = 0.0;
    double serial_s = timed([&] {
        for (double t : times) {
            const auto u = ref::propagator_at(decomp, t);
            (void)u;
        }
    });
    double parallel_s = timed([&] {
        for (double t : times) {
            const auto u = propagator_at(decomp, t);
            (void)u;
        }
    });
    {
        const auto a = ref::propagator_at(decomp, times.back());
        const auto b = propagator_at(decomp, times.back());
        worst_prop = max_abs_diff(a.u, b.u);
    }
    std::printf("propagator_at x%-4d   serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   max|diff| %.2e\n",
                samples, 1e3 * serial_s, 1e3 * parallel_s, serial_s / parallel_s, worst_prop);

    // Correlation maps at a fixed propagator.
    const auto u = propagator_at(decomp, times.back());
    double worst_corr = 0.0;
    serial_s = timed([&] {
        for (int rep = 0; rep < samples; ++rep) {
            const auto g = ref::correlation_product(u, 1, 2);
            (void)g;
        }
    });
    parallel_s = timed([&] {
        for (int rep = 0; rep < samples; ++rep) {
            const auto g = correlation_product(u, 1, 2);
            (void)g;
        }
    });
    {
        const auto a = ref::correlation_product(u, 1, 2);
        const auto b = correlation_product(u, 1, 2);
        for (std::size_t i = 0; i < a.gamma.size(); ++i)
            worst_corr = std::max(worst_corr, std::abs(a.gamma[i] - b.gamma[i]));
    }
    std::printf("correlation   x%-4d   serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   max|diff| %.2e\n",
                samples, 1e3 * serial_s, 1e3 * parallel_s, serial_s / parallel_s, worst_corr);

    // Eigen decomposition: root polishing is parallel across eigenvalues,
    // so compare one thread against the full team.
    const int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
    serial_s = timed([&] {
        const auto d = eigen_decompose(LatticeSpec{n});
        (void)d;
    });
    omp_set_num_threads(max_threads);
    parallel_s = timed([&] {
        const auto d = eigen_decompose(LatticeSpec{n});
        (void)d;
    });
    std::printf("eigen_decompose       serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx\n",
                1e3 * serial_s, 1e3 * parallel_s, serial_s / parallel_s);
    return 0;
}
