// Input states and observables: mean photon numbers, two-mode fidelity,
// two-photon correlation maps and revival analysis.
//
// All input states are normalized to unit norm.  For the NOON class this
// means amplitudes 1/sqrt(2 m!) on each branch; a 1/(2 sqrt(m!))
// prefactor would give squared norm 1/2 for j != k and break the
// two-photon sum rule sum_{pq} Gamma_{pq} = 2 that the correlation
// formulas satisfy.

#pragma once

#include <span>
#include <variant>
#include <vector>

#include "gflat/propagator.hpp"
#include "gflat/spectral.hpp"

namespace gflat {

// m >= 1 photons in one waveguide.
struct FockAt {
    int waveguide = 0;
    int photons = 1;
};

// One photon spread over the lattice, sum |c_j|^2 = 1.  Covers Bell/W
// states and beam-splitter outputs.
struct SinglePhotonSuperposition {
    std::vector<cdouble> amplitudes;
};

// One photon in each of two distinct waveguides.
struct TwoPhotonProduct {
    int j = 0;
    int k = 1;
};

// (|m,0> + e^{im phi} |0,m>)/sqrt(2) across two distinct waveguides.
struct Noon {
    int j = 0;
    int k = 1;
    int photons = 2;
    double phase = 0.0;
};

using InputState = std::variant<FockAt, SinglePhotonSuperposition, TwoPhotonProduct, Noon>;

// Throws std::invalid_argument on out-of-range indices, index clashes,
// photon counts below the class minimum, or unnormalized amplitudes
// (deviation above 1e-12).
void validate_input_state(const InputState& state, int lattice_size);

// Total photon number carried by the state (m, 1, 2, m).
double photon_total(const InputState& state);

// Mean photon number per waveguide.  Entry q:
//   Fock(p, m):        m |U_{p,q}|^2
//   superposition c:   |sum_j c_j U_{j,q}|^2
//   product x:         sum_j |U_{x_j,q}|^2
//   NOON(j, k, m):     (m/2)(|U_{j,q}|^2 + |U_{k,q}|^2)
std::vector<double> mean_photon_fock(const Propagator& u, int p, int m);
std::vector<double> mean_photon_superposition(const Propagator& u, std::span<const cdouble> c);
std::vector<double> mean_photon_product(const Propagator& u, std::span<const int> x);
std::vector<double> mean_photon_noon(const Propagator& u, int j, int k, int m);

// F(t) = | |alpha|^2 U_{j,j} + |beta|^2 U_{k,k} + 2 Re(alpha* beta) U_{j,k} |^2
// for the two-mode single-photon input alpha a_j^+ + beta a_k^+.
// Evaluated per time in O(N) from the decomposition; F(0) = 1.
std::vector<double> fidelity_two_mode(const SpectralDecomposition& decomp,
                                      std::span<const double> times, int j, int k, cdouble alpha,
                                      cdouble beta);

// Two-photon coincidence matrix Gamma_{pq}, symmetric, entries >= 0,
// sum_{pq} Gamma_{pq} = 2.
struct CorrelationMap {
    int size = 0;
    std::vector<double> gamma;  // row-major
    int clamped = 0;            // entries in [-1e-12, 0) clamped to zero

    double operator()(int p, int q) const { return gamma[std::size_t(p) * size + q]; }
    double sum() const;
};

// Product input a_j^+ a_k^+ |0>:  Gamma_{pq} = |U_{p,j} U_{q,k} + U_{p,k} U_{q,j}|^2.
CorrelationMap correlation_product(const Propagator& u, int j, int k);

// Two-photon NOON input:
//   Gamma_{pq} = |U_{p,j} U_{q,j}|^2 + |U_{p,k} U_{q,k}|^2
//                + 2 Re(e^{im phi} U*_{p,j} U*_{q,j} U_{p,k} U_{q,k}).
// Only m = 2 is supported; the correlation formula is specific to two
// photons and higher m is rejected.
CorrelationMap correlation_noon(const Propagator& u, int j, int k, int m, double phi);

// t = pi / lambda_min, the slowest beat period of the finite lattice.
double revival_time_estimate(const SpectralDecomposition& decomp);

struct RevivalPeak {
    double t = 0.0;
    double value = 0.0;
};

// Deterministic grid scan of |U_{j,j}(t)|^2 over (t_lo, t_hi]: `samples`
// uniform points, earliest maximum wins on ties.
RevivalPeak revival_search(const SpectralDecomposition& decomp, int j, double t_lo, double t_hi,
                           int samples);

}  // namespace gflat

namespace gflat::ref {

// Serial reference implementations of the correlation kernels.
CorrelationMap correlation_product(const Propagator& u, int j, int k);
CorrelationMap correlation_noon(const Propagator& u, int j, int k, int m, double phi);

}  // namespace gflat::ref
