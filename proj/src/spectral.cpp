#include "gflat/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gflat/oracle.hpp"

namespace gflat {

namespace {

int sign_of(const ScaledValue& v) {
    if (v.mantissa > 0.0) return 1;
    if (v.mantissa < 0.0) return -1;
    return 0;
}

// Locate eigenvalue j of M: Sturm bisection down to an isolating bracket,
// then Newton on u_N with u_N' = sqrt(N) u_{N-1}.  The bracket is kept as
// a safeguard; a step that would leave it falls back to its midpoint.
double polish_root(const CouplingMatrix& m, int j, double radius, const Tolerances& tol) {
    const int n = m.size;
    double lo = -radius;
    double hi = radius;
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (oracle::sturm_count(m, mid) <= j)
            lo = mid;
        else
            hi = mid;
    }

    auto u_top = [n](double x) {
        auto seq = hermite_orthonormal_seq(x, n + 1);
        return std::pair{seq[n], seq[n - 1]};
    };

    const int s_lo = sign_of(u_top(lo).first);
    const int s_hi = sign_of(u_top(hi).first);
    if (s_lo == 0) return lo;
    if (s_hi == 0) return hi;
    if (s_lo == s_hi) {
        // Endpoint signs agree only when the evaluation noise floor hides
        // the sign change; the Sturm count still separates the root.
        while (hi - lo > 1e-15 * (1.0 + std::abs(lo))) {
            const double mid = 0.5 * (lo + hi);
            if (oracle::sturm_count(m, mid) <= j)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    const double sqrt_n = std::sqrt(double(n));
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < tol.newton_max_iter; ++iter) {
        const auto [un, unm1] = u_top(x);
        if (un.mantissa == 0.0) return x;
        if (sign_of(un) == s_lo)
            lo = x;
        else
            hi = x;

        double next;
        if (unm1.mantissa == 0.0) {
            next = 0.5 * (lo + hi);
        } else {
            const double step =
                std::ldexp(un.mantissa / unm1.mantissa, un.exponent2 - unm1.exponent2) / sqrt_n;
            next = x - step;
            if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
        }
        const double dx = std::abs(next - x);
        x = next;
        if (dx <= tol.newton_step_rel * (1.0 + std::abs(x))) return x;
    }
    throw std::runtime_error("eigen_decompose: Newton polish did not converge for root " +
                             std::to_string(j));
}

// Normalize the scaled sequence into a unit eigenvector.  Entries are
// brought to the largest exponent first; anything that underflows at
// that scale contributes nothing to the norm.
void write_eigenvector(const std::vector<ScaledValue>& u, double* row) {
    const int n = int(u.size());
    int emax = 0;
    bool any = false;
    for (const auto& s : u) {
        if (s.mantissa == 0.0) continue;
        if (!any || s.exponent2 > emax) emax = s.exponent2;
        any = true;
    }
    double norm2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = std::ldexp(u[k].mantissa, u[k].exponent2 - emax);
        row[k] = x;
        norm2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (int k = 0; k < n; ++k) row[k] *= inv;
}

}  // namespace

CouplingMatrix coupling_matrix(const LatticeSpec& spec) {
    if (spec.size < 1) throw std::invalid_argument("coupling_matrix: lattice size must be >= 1");
    CouplingMatrix m;
    m.size = spec.size;
    m.off_diagonal.resize(spec.size - 1);
    for (int j = 0; j + 1 < spec.size; ++j) m.off_diagonal[j] = std::sqrt(double(j + 1));
    return m;
}

SpectralDecomposition eigen_decompose(const LatticeSpec& spec, const Tolerances& tol) {
    const CouplingMatrix m = coupling_matrix(spec);
    const int n = m.size;
    const double radius = oracle::spectral_radius_bound(m) + 1.0;

    SpectralDecomposition d;
    d.size = n;
    d.eigenvalues.resize(n);
    d.eigenvectors.resize(std::size_t(n) * n);

    bool failed = false;
    std::string failure;

#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
        try {
            const double lambda = polish_root(m, j, radius, tol);
            d.eigenvalues[j] = lambda;
            const auto u = hermite_orthonormal_seq(lambda, n);
            write_eigenvector(u, &d.eigenvectors[std::size_t(j) * n]);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                failure = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error(failure);
    return d;
}

double min_positive_eigenvalue(const SpectralDecomposition& decomp) {
    constexpr double kZeroTol = 1e-12;
    for (double lambda : decomp.eigenvalues)
        if (lambda > kZeroTol) return lambda;
    throw std::invalid_argument("min_positive_eigenvalue: spectrum has no positive eigenvalue");
}

std::vector<double> spectral_weights(const SpectralDecomposition& decomp, int j) {
    if (j < 0 || j >= decomp.size)
        throw std::out_of_range("spectral_weights: waveguide index out of range");
    std::vector<double> w(decomp.size);
    for (int l = 0; l < decomp.size; ++l) w[l] = decomp.vec(l, j) * decomp.vec(l, j);
    return w;
}

double orthonormality_defect(const SpectralDecomposition& decomp) {
    const int n = decomp.size;
    double defect = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = j; k < n; ++k) {
            double s = 0.0;
            for (int l = 0; l < n; ++l) s += decomp.vec(j, l) * decomp.vec(k, l);
            if (j == k) s -= 1.0;
            defect = std::max(defect, std::abs(s));
        }
    }
    return defect;
}

double coupling_residual(const SpectralDecomposition& decomp) {
    const int n = decomp.size;
    const CouplingMatrix m = coupling_matrix(LatticeSpec{n});
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            double mv = 0.0;
            if (k > 0) mv += m.off_diagonal[k - 1] * decomp.vec(j, k - 1);
            if (k + 1 < n) mv += m.off_diagonal[k] * decomp.vec(j, k + 1);
            worst = std::max(worst, std::abs(mv - decomp.eigenvalues[j] * decomp.vec(j, k)));
        }
    }
    return worst;
}

double characteristic_residual(const SpectralDecomposition& decomp, int j) {
    if (j < 0 || j >= decomp.size)
        throw std::out_of_range("characteristic_residual: eigenvalue index out of range");
    const auto u = hermite_orthonormal_seq(decomp.eigenvalues[j], decomp.size + 1);
    // log2 magnitude of each term; compare the degree-N term to the peak.
    double best_log2 = -1e300;
    for (const auto& s : u) {
        if (s.mantissa == 0.0) continue;
        best_log2 = std::max(best_log2, std::log2(std::abs(s.mantissa)) + s.exponent2);
    }
    const auto& top = u[decomp.size];
    if (top.mantissa == 0.0) return 0.0;
    const double top_log2 = std::log2(std::abs(top.mantissa)) + top.exponent2;
    return std::exp2(top_log2 - best_log2);
}

}  // namespace gflat
