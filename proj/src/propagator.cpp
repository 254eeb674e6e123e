#include "gflat/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace gflat {

namespace {

std::vector<cdouble> phases(const SpectralDecomposition& decomp, double t) {
    std::vector<cdouble> c(decomp.size);
    for (int l = 0; l < decomp.size; ++l) {
        const double arg = -decomp.eigenvalues[l] * t;
        c[l] = cdouble(std::cos(arg), std::sin(arg));
    }
    return c;
}

}  // namespace

std::vector<double> TimeGrid::times() const {
    if (!(t_start >= 0.0)) throw std::invalid_argument("TimeGrid: t_start must be >= 0");
    if (!(t_end > t_start)) throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
    if (samples < 2) throw std::invalid_argument("TimeGrid: need at least 2 samples");
    std::vector<double> t(samples);
    const double dt = (t_end - t_start) / double(samples - 1);
    for (int i = 0; i < samples; ++i) t[i] = t_start + dt * i;
    t.back() = t_end;
    return t;
}

Propagator propagator_at(const SpectralDecomposition& decomp, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("propagator_at: time must be finite");
    const int n = decomp.size;
    const auto c = phases(decomp, t);

    Propagator p;
    p.time = t;
    p.u = ComplexMatrix(n);

    // Row j accumulates sum_l (c_l v_{l,j}) * v_{l,k}; rows are
    // independent, so the partition across threads cannot change any
    // entry's summation order.
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        cdouble* row = &p.u(j, 0);
        for (int l = 0; l < n; ++l) {
            const cdouble w = c[l] * decomp.vec(l, j);
            const double* vl = &decomp.eigenvectors[std::size_t(l) * n];
            for (int k = 0; k < n; ++k) row[k] += w * vl[k];
        }
    }
    return p;
}

std::vector<Propagator> propagator_series(const SpectralDecomposition& decomp,
                                          std::span<const double> times) {
    std::vector<Propagator> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(propagator_at(decomp, t));
    return out;
}

void for_each_propagator(const SpectralDecomposition& decomp, std::span<const double> times,
                         const std::function<void(const Propagator&)>& consume) {
    for (double t : times) consume(propagator_at(decomp, t));
}

cdouble propagator_entry(const SpectralDecomposition& decomp, int j, int k, double t) {
    const int n = decomp.size;
    if (j < 0 || j >= n || k < 0 || k >= n)
        throw std::out_of_range("propagator_entry: waveguide index out of range");
    cdouble s = 0.0;
    for (int l = 0; l < n; ++l) {
        const double arg = -decomp.eigenvalues[l] * t;
        s += cdouble(std::cos(arg), std::sin(arg)) * (decomp.vec(l, j) * decomp.vec(l, k));
    }
    return s;
}

std::vector<cdouble> propagator_column(const SpectralDecomposition& decomp, int p, double t) {
    const int n = decomp.size;
    if (p < 0 || p >= n) throw std::out_of_range("propagator_column: waveguide index out of range");
    const auto c = phases(decomp, t);
    std::vector<cdouble> col(n);
    for (int l = 0; l < n; ++l) {
        const cdouble w = c[l] * decomp.vec(l, p);
        const double* vl = &decomp.eigenvectors[std::size_t(l) * n];
        for (int q = 0; q < n; ++q) col[q] += w * vl[q];
    }
    return col;
}

std::vector<cdouble> collective_modes(const SpectralDecomposition& decomp,
                                      std::span<const cdouble> amplitudes) {
    const int n = decomp.size;
    if (int(amplitudes.size()) != n)
        throw std::invalid_argument("collective_modes: amplitude length must match lattice size");
    std::vector<cdouble> b(n);
    for (int l = 0; l < n; ++l) {
        cdouble s = 0.0;
        for (int k = 0; k < n; ++k) s += decomp.vec(l, k) * amplitudes[k];
        b[l] = s;
    }
    return b;
}

}  // namespace gflat
