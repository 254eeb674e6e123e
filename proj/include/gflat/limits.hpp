// Closed-form single-photon intensities of the semi-infinite lattice and
// comparison reports against the exact finite result.
//
// For a photon injected at waveguide k of the semi-infinite lattice, the
// intensity that arrives at waveguide k -+ s after time t is
//   down (toward 0):  | e^{-t^2/2} (it)^s sqrt((k-s)!/k!) L^{(s)}_{k-s}(t^2) |^2
//   up (away from 0): | e^{-t^2/2} (it)^s sqrt(k!/(k+s)!) L^{(s)}_{k}(t^2)  |^2
// and for injection at waveguide zero this reduces to the Poisson profile
// e^{-t^2} t^{2q} / q!.  The formulas hold while the wavefront has not
// reached the far edge of the finite lattice; compare_finite_infinite
// reports the residual edge occupation so that regime is visible.

#pragma once

#include <vector>

#include "gflat/spectral.hpp"

namespace gflat {

enum class Direction { down, up };

// Intensity at waveguide k-s (down) or k+s (up) for injection at k.
// Throws std::invalid_argument for s > k with direction down.
double semi_infinite_intensity(int k, int s, Direction direction, double t);

// e^{-t^2} t^{2q} / q!, evaluated in log space so q up to a few hundred
// cannot overflow.
double poisson_intensity(int q, double t);

struct LimitComparison {
    struct Record {
        int waveguide = 0;
        double finite = 0.0;
        double infinite = 0.0;
        double abs_diff = 0.0;
    };

    int size = 0;
    int input = 0;
    double time = 0.0;
    std::vector<Record> records;
    double max_abs_diff = 0.0;
    // Total |U_{q,p}|^2 over the last 10 waveguides: the finite-size
    // leakage diagnostic (reported, not enforced).
    double edge_occupation = 0.0;
};

LimitComparison compare_finite_infinite(const SpectralDecomposition& decomp, int p, double t);

}  // namespace gflat
