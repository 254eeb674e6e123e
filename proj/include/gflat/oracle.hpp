// Independent brute-force validators: dense matrix exponential and
// Sturm-sequence eigenvalue counting.  These never touch the Hermite
// closed form, so they anchor the fast paths in tests and in the CLI
// `verify` subcommand.  Correctness over speed.

#pragma once

#include "gflat/matrix.hpp"
#include "gflat/spectral.hpp"

namespace gflat::oracle {

// Largest N accepted by dense_expm; keeps brute-force runs under a second.
inline constexpr int kDenseCap = 64;

// exp(-i M t) by scaling and squaring with a truncated Taylor series
// (order 16, scaled so ||M t / 2^s||_inf <= 0.5).  Throws
// std::invalid_argument above kDenseCap.
ComplexMatrix dense_expm(const CouplingMatrix& m, double t);

// Number of eigenvalues of M strictly below x (Sturm sequence on the
// tridiagonal matrix, pivot-underflow guarded).
int sturm_count(const CouplingMatrix& m, double x);

// All N eigenvalues by Sturm bisection to absolute tolerance 1e-12,
// ascending.
std::vector<double> bisect_eigenvalues(const CouplingMatrix& m);

// Interval certain to contain the whole spectrum (Gershgorin bound).
double spectral_radius_bound(const CouplingMatrix& m);

}  // namespace gflat::oracle
