// Glauber-Fock coupling matrix and its exact spectral decomposition.
//
// The lattice couples waveguides j and j+1 with strength sqrt(j+1) (in
// units of the base coupling g), giving a real symmetric tridiagonal
// matrix with zero diagonal.  Its eigenvalues are sqrt(2) times the roots
// of the N-th physicists' Hermite polynomial and its eigenvectors follow
// from the orthonormal Hermite recurrence, so the decomposition is
// computed from that closed form rather than from a QL/QR sweep.

#pragma once

#include <vector>

#include "gflat/specfun.hpp"

namespace gflat {

struct LatticeSpec {
    int size = 1;  // number of waveguides, N >= 1
};

// m_{j,k} = delta_{j+1,k} sqrt(k) + delta_{j,k+1} sqrt(j); zero diagonal.
struct CouplingMatrix {
    int size = 0;
    std::vector<double> off_diagonal;  // entry j = sqrt(j+1), couples j and j+1
};

// Eigenvalues ascending; row j of `eigenvectors` is the unit eigenvector
// for eigenvalues[j], sign fixed by v_{j,0} > 0.
struct SpectralDecomposition {
    int size = 0;
    std::vector<double> eigenvalues;
    std::vector<double> eigenvectors;  // row-major N x N

    double vec(int j, int k) const { return eigenvectors[std::size_t(j) * size + k]; }
};

// Default numerical tolerances; every stated default keeps all N <= 200
// within double precision.  Overridable as one record.
struct Tolerances {
    double newton_step_rel = 1e-14;  // eigenvalue polish: stop at |dlambda| <= tol*(1+|lambda|)
    int newton_max_iter = 50;
    double eigen = 1e-10;            // eigenvalue agreement checks
    double unitarity = 1e-10;        // ||U^dagger U - I||_max checks
    double conservation = 1e-10;     // photon-number total drift
};

CouplingMatrix coupling_matrix(const LatticeSpec& spec);

// Exact decomposition: Sturm-bisection brackets (no root missed), then
// Newton polish on the orthonormal Hermite recurrence using
// u_N'(lambda) = sqrt(N) u_{N-1}(lambda).  Roots are independent and
// processed in parallel.  Throws std::runtime_error if a Newton polish
// fails to converge (internal bracketing bug, not a user error).
SpectralDecomposition eigen_decompose(const LatticeSpec& spec, const Tolerances& tol = {});

// Smallest strictly positive eigenvalue (> 1e-12).  For even N this is
// lambda_{N/2}, for odd N lambda_{(N+1)/2}, 0-based ascending.  Throws
// std::invalid_argument when the spectrum has no positive part (N = 1).
double min_positive_eigenvalue(const SpectralDecomposition& decomp);

// w_l = v_{l,j}^2, the probability weight of eigenmode l at waveguide j;
// the weights sum to 1.
std::vector<double> spectral_weights(const SpectralDecomposition& decomp, int j);

// Diagnostics used by tests and the verify command.
double orthonormality_defect(const SpectralDecomposition& decomp);          // ||V V^T - I||_max
double coupling_residual(const SpectralDecomposition& decomp);              // max_j ||M v_j - lambda_j v_j||_inf
// Magnitude of the degree-N orthonormal-recurrence term at lambda_j,
// relative to the largest term of the sequence (the computable form of
// the characteristic equation residual).
double characteristic_residual(const SpectralDecomposition& decomp, int j);

}  // namespace gflat
