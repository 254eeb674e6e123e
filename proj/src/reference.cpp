// Serial reference kernels.  Deliberately plain nested loops over the
// defining formulas, with no OpenMP and no row restructuring, so the
// parallel kernels have an independent baseline to be tested and
// benchmarked against.

#include <cmath>
#include <stdexcept>

#include "gflat/propagator.hpp"
#include "gflat/states.hpp"

namespace gflat::ref {

Propagator propagator_at(const SpectralDecomposition& decomp, double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("ref::propagator_at: time must be finite");
    const int n = decomp.size;
    Propagator p;
    p.time = t;
    p.u = ComplexMatrix(n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            cdouble s = 0.0;
            for (int l = 0; l < n; ++l) {
                const double arg = -decomp.eigenvalues[l] * t;
                s += cdouble(std::cos(arg), std::sin(arg)) * (decomp.vec(l, j) * decomp.vec(l, k));
            }
            p.u(j, k) = s;
        }
    }
    return p;
}

CorrelationMap correlation_product(const Propagator& u, int j, int k) {
    const int n = u.size();
    if (j == k) throw std::invalid_argument("ref::correlation_product: indices must differ");
    CorrelationMap g;
    g.size = n;
    g.gamma.resize(std::size_t(n) * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            g.gamma[std::size_t(p) * n + q] = std::norm(u(p, j) * u(q, k) + u(p, k) * u(q, j));
    return g;
}

CorrelationMap correlation_noon(const Propagator& u, int j, int k, int m, double phi) {
    const int n = u.size();
    if (j == k) throw std::invalid_argument("ref::correlation_noon: indices must differ");
    if (m != 2) throw std::invalid_argument("ref::correlation_noon: m must be 2");
    CorrelationMap g;
    g.size = n;
    g.gamma.resize(std::size_t(n) * n);
    const cdouble ph(std::cos(m * phi), std::sin(m * phi));
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const cdouble a = u(p, j) * u(q, j);
            const cdouble b = u(p, k) * u(q, k);
            g.gamma[std::size_t(p) * n + q] =
                std::norm(a) + std::norm(b) + 2.0 * std::real(ph * std::conj(a) * b);
        }
    }
    return g;
}

}  // namespace gflat::ref
