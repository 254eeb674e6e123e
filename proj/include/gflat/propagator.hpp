// Time-evolution propagator U(t) with entries
//   U_{j,k}(t) = sum_l exp(-i lambda_l t) v_{l,j} v_{l,k},
// reconstructed from the spectral decomposition at every requested time.
// This is exact and unconditionally stable; no step-based integrator is
// involved.  The full-matrix kernels run their row loop under OpenMP;
// serial reference versions live in gflat::ref for testing and the
// benchmark target.

#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gflat/matrix.hpp"
#include "gflat/spectral.hpp"

namespace gflat {

struct Propagator {
    double time = 0.0;
    ComplexMatrix u;

    int size() const { return u.size; }
    const cdouble& operator()(int j, int k) const { return u(j, k); }
};

// Uniform time grid, both endpoints included.
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    int samples = 2;

    // Throws std::invalid_argument unless t_start >= 0, t_end > t_start
    // and samples >= 2.
    std::vector<double> times() const;
};

Propagator propagator_at(const SpectralDecomposition& decomp, double t);

// One propagator per time, identical to independent propagator_at calls.
std::vector<Propagator> propagator_series(const SpectralDecomposition& decomp,
                                          std::span<const double> times);

// Streaming variant: propagators are handed to the consumer one at a
// time so a long series never holds more than one N x N matrix.
void for_each_propagator(const SpectralDecomposition& decomp, std::span<const double> times,
                         const std::function<void(const Propagator&)>& consume);

// Single entry U_{j,k}(t) in O(N); the fidelity and revival scans rely on
// this instead of building full matrices.
cdouble propagator_entry(const SpectralDecomposition& decomp, int j, int k, double t);

// Column p of U(t) in O(N^2) (equals row p, U is symmetric).
std::vector<cdouble> propagator_column(const SpectralDecomposition& decomp, int p, double t);

// Collective-mode amplitudes b = V a; in this basis the evolution is the
// diagonal phase multiplication b_j -> exp(-i lambda_j t) b_j.
std::vector<cdouble> collective_modes(const SpectralDecomposition& decomp,
                                      std::span<const cdouble> amplitudes);

}  // namespace gflat

namespace gflat::ref {

// Serial reference implementations (plain loops, no OpenMP), kept as the
// comparison baseline for the parallel kernels.
Propagator propagator_at(const SpectralDecomposition& decomp, double t);

}  // namespace gflat::ref
