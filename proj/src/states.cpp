#include "gflat/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gflat {

namespace {

void check_index(int i, int n, const char* what) {
    if (i < 0 || i >= n) throw std::invalid_argument(std::string(what) + ": index out of range");
}

void check_distinct(int j, int k, const char* what) {
    if (j == k) throw std::invalid_argument(std::string(what) + ": waveguide indices must differ");
}

// Clamp tiny negative rounding residue; anything below -1e-12 is a bug.
void finalize(CorrelationMap& g, const char* what) {
    for (auto& x : g.gamma) {
        if (x < 0.0) {
            if (x < -1e-12) throw std::runtime_error(std::string(what) + ": negative coincidence");
            x = 0.0;
            ++g.clamped;
        }
    }
}

}  // namespace

void validate_input_state(const InputState& state, int n) {
    if (std::holds_alternative<FockAt>(state)) {
        const auto& s = std::get<FockAt>(state);
        check_index(s.waveguide, n, "FockAt");
        if (s.photons < 1) throw std::invalid_argument("FockAt: need at least one photon");
    } else if (std::holds_alternative<SinglePhotonSuperposition>(state)) {
        const auto& s = std::get<SinglePhotonSuperposition>(state);
        if (int(s.amplitudes.size()) != n)
            throw std::invalid_argument("SinglePhotonSuperposition: amplitude length mismatch");
        double norm2 = 0.0;
        for (const auto& c : s.amplitudes) norm2 += std::norm(c);
        if (std::abs(norm2 - 1.0) > 1e-12)
            throw std::invalid_argument("SinglePhotonSuperposition: amplitudes not normalized");
    } else if (std::holds_alternative<TwoPhotonProduct>(state)) {
        const auto& s = std::get<TwoPhotonProduct>(state);
        check_index(s.j, n, "TwoPhotonProduct");
        check_index(s.k, n, "TwoPhotonProduct");
        check_distinct(s.j, s.k, "TwoPhotonProduct");
    } else {
        const auto& s = std::get<Noon>(state);
        check_index(s.j, n, "Noon");
        check_index(s.k, n, "Noon");
        check_distinct(s.j, s.k, "Noon");
        if (s.photons < 2) throw std::invalid_argument("Noon: need at least two photons");
    }
}

double photon_total(const InputState& state) {
    if (std::holds_alternative<FockAt>(state)) return std::get<FockAt>(state).photons;
    if (std::holds_alternative<SinglePhotonSuperposition>(state)) return 1.0;
    if (std::holds_alternative<TwoPhotonProduct>(state)) return 2.0;
    return std::get<Noon>(state).photons;
}

std::vector<double> mean_photon_fock(const Propagator& u, int p, int m) {
    const int n = u.size();
    check_index(p, n, "mean_photon_fock");
    if (m < 1) throw std::invalid_argument("mean_photon_fock: need at least one photon");
    std::vector<double> mean(n);
    for (int q = 0; q < n; ++q) mean[q] = m * std::norm(u(p, q));
    return mean;
}

std::vector<double> mean_photon_superposition(const Propagator& u, std::span<const cdouble> c) {
    const int n = u.size();
    if (int(c.size()) != n)
        throw std::invalid_argument("mean_photon_superposition: amplitude length mismatch");
    double norm2 = 0.0;
    for (const auto& x : c) norm2 += std::norm(x);
    if (std::abs(norm2 - 1.0) > 1e-9)
        throw std::invalid_argument("mean_photon_superposition: amplitudes not normalized");
    std::vector<double> mean(n);
    for (int q = 0; q < n; ++q) {
        cdouble s = 0.0;
        for (int j = 0; j < n; ++j) s += c[j] * u(j, q);
        mean[q] = std::norm(s);
    }
    return mean;
}

std::vector<double> mean_photon_product(const Propagator& u, std::span<const int> x) {
    const int n = u.size();
    for (std::size_t a = 0; a < x.size(); ++a) {
        check_index(x[a], n, "mean_photon_product");
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (x[a] == x[b])
                throw std::invalid_argument("mean_photon_product: indices must be distinct");
    }
    std::vector<double> mean(n);
    for (int xj : x)
        for (int q = 0; q < n; ++q) mean[q] += std::norm(u(xj, q));
    return mean;
}

std::vector<double> mean_photon_noon(const Propagator& u, int j, int k, int m) {
    const int n = u.size();
    check_index(j, n, "mean_photon_noon");
    check_index(k, n, "mean_photon_noon");
    check_distinct(j, k, "mean_photon_noon");
    if (m < 2) throw std::invalid_argument("mean_photon_noon: need at least two photons");
    std::vector<double> mean(n);
    for (int q = 0; q < n; ++q)
        mean[q] = 0.5 * m * (std::norm(u(j, q)) + std::norm(u(k, q)));
    return mean;
}

std::vector<double> fidelity_two_mode(const SpectralDecomposition& decomp,
                                      std::span<const double> times, int j, int k, cdouble alpha,
                                      cdouble beta) {
    const int n = decomp.size;
    check_index(j, n, "fidelity_two_mode");
    check_index(k, n, "fidelity_two_mode");
    check_distinct(j, k, "fidelity_two_mode");
    const double wa = std::norm(alpha);
    const double wb = std::norm(beta);
    if (std::abs(wa + wb - 1.0) > 1e-9)
        throw std::invalid_argument("fidelity_two_mode: amplitudes not normalized");
    const double cross = 2.0 * std::real(std::conj(alpha) * beta);

    std::vector<double> f(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(times.size()); ++i) {
        const double t = times[i];
        // Three entries of U suffice; each is an O(N) phase sum.
        cdouble ujj = 0.0, ukk = 0.0, ujk = 0.0;
        for (int l = 0; l < n; ++l) {
            const double arg = -decomp.eigenvalues[l] * t;
            const cdouble ph(std::cos(arg), std::sin(arg));
            const double vj = decomp.vec(l, j);
            const double vk = decomp.vec(l, k);
            ujj += ph * (vj * vj);
            ukk += ph * (vk * vk);
            ujk += ph * (vj * vk);
        }
        f[i] = std::norm(wa * ujj + wb * ukk + cross * ujk);
    }
    return f;
}

double CorrelationMap::sum() const {
    double s = 0.0;
    for (double x : gamma) s += x;
    return s;
}

CorrelationMap correlation_product(const Propagator& u, int j, int k) {
    const int n = u.size();
    check_index(j, n, "correlation_product");
    check_index(k, n, "correlation_product");
    check_distinct(j, k, "correlation_product");
    CorrelationMap g;
    g.size = n;
    g.gamma.resize(std::size_t(n) * n);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < n; ++p) {
        const cdouble upj = u(p, j);
        const cdouble upk = u(p, k);
        double* row = &g.gamma[std::size_t(p) * n];
        for (int q = 0; q < n; ++q) row[q] = std::norm(upj * u(q, k) + upk * u(q, j));
    }
    finalize(g, "correlation_product");
    return g;
}

CorrelationMap correlation_noon(const Propagator& u, int j, int k, int m, double phi) {
    const int n = u.size();
    check_index(j, n, "correlation_noon");
    check_index(k, n, "correlation_noon");
    check_distinct(j, k, "correlation_noon");
    if (m != 2)
        throw std::invalid_argument(
            "correlation_noon: the coincidence formula is specific to two photons (m = 2)");
    const cdouble branch_phase(std::cos(m * phi), std::sin(m * phi));
    CorrelationMap g;
    g.size = n;
    g.gamma.resize(std::size_t(n) * n);
#pragma omp parallel for schedule(static)
    for (int p = 0; p < n; ++p) {
        const cdouble upj = u(p, j);
        const cdouble upk = u(p, k);
        double* row = &g.gamma[std::size_t(p) * n];
        for (int q = 0; q < n; ++q) {
            // |a|^2 + |b|^2 + 2 Re(e^{im phi} a* b) == |a + e^{im phi} b|^2
            // with a = U_{p,j} U_{q,j}, b = U_{p,k} U_{q,k}; the magnitude
            // form keeps entries nonnegative by construction.
            row[q] = std::norm(upj * u(q, j) + branch_phase * (upk * u(q, k)));
        }
    }
    finalize(g, "correlation_noon");
    return g;
}

double revival_time_estimate(const SpectralDecomposition& decomp) {
    if (decomp.size < 2)
        throw std::invalid_argument("revival_time_estimate: need a lattice of at least 2");
    return M_PI / min_positive_eigenvalue(decomp);
}

RevivalPeak revival_search(const SpectralDecomposition& decomp, int j, double t_lo, double t_hi,
                           int samples) {
    check_index(j, decomp.size, "revival_search");
    if (!(0.0 < t_lo && t_lo < t_hi)) throw std::invalid_argument("revival_search: empty window");
    if (samples < 2) throw std::invalid_argument("revival_search: need at least 2 samples");

    // Grid over (t_lo, t_hi]: samples points, the first strictly above
    // t_lo, the last exactly t_hi.
    const double dt = (t_hi - t_lo) / double(samples);
    const auto w = spectral_weights(decomp, j);

    std::vector<double> value(samples);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) {
        const double t = (i + 1 == samples) ? t_hi : t_lo + dt * (i + 1);
        cdouble ujj = 0.0;
        for (int l = 0; l < decomp.size; ++l) {
            const double arg = -decomp.eigenvalues[l] * t;
            ujj += cdouble(std::cos(arg), std::sin(arg)) * w[l];
        }
        value[i] = std::norm(ujj);
    }

    int best = 0;
    for (int i = 1; i < samples; ++i)
        if (value[i] > value[best]) best = i;  // strict: earliest maximum wins
    RevivalPeak peak;
    peak.t = (best + 1 == samples) ? t_hi : t_lo + dt * (best + 1);
    peak.value = value[best];
    return peak;
}

}  // namespace gflat
