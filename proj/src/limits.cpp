#include "gflat/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "gflat/propagator.hpp"
#include "gflat/specfun.hpp"

namespace gflat {

double poisson_intensity(int q, double t) {
    if (q < 0) throw std::invalid_argument("poisson_intensity: index must be >= 0");
    if (t == 0.0) return q == 0 ? 1.0 : 0.0;
    return std::exp(-t * t + 2.0 * q * std::log(std::abs(t)) - std::lgamma(q + 1.0));
}

double semi_infinite_intensity(int k, int s, Direction direction, double t) {
    if (k < 0 || s < 0)
        throw std::invalid_argument("semi_infinite_intensity: indices must be >= 0");
    if (direction == Direction::down && s > k)
        throw std::invalid_argument("semi_infinite_intensity: down shift cannot exceed the input index");
    if (t == 0.0) return s == 0 ? 1.0 : 0.0;

    // log of the prefactor e^{-t^2/2} t^s sqrt(small!/large!); the
    // Laguerre value stays in its well-conditioned range (degree <= k).
    double log_pref;
    double lag;
    if (direction == Direction::down) {
        log_pref = -0.5 * t * t + s * std::log(std::abs(t)) +
                   0.5 * (std::lgamma(k - s + 1.0) - std::lgamma(k + 1.0));
        lag = laguerre_eval(k - s, s, t * t);
    } else {
        log_pref = -0.5 * t * t + s * std::log(std::abs(t)) +
                   0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + s + 1.0));
        lag = laguerre_eval(k, s, t * t);
    }
    if (lag == 0.0) return 0.0;
    return std::exp(2.0 * (log_pref + std::log(std::abs(lag))));
}

LimitComparison compare_finite_infinite(const SpectralDecomposition& decomp, int p, double t) {
    const int n = decomp.size;
    if (p < 0 || p >= n)
        throw std::out_of_range("compare_finite_infinite: input index out of range");

    const auto column = propagator_column(decomp, p, t);

    LimitComparison cmp;
    cmp.size = n;
    cmp.input = p;
    cmp.time = t;
    cmp.records.resize(n);
    for (int q = 0; q < n; ++q) {
        auto& r = cmp.records[q];
        r.waveguide = q;
        r.finite = std::norm(column[q]);
        r.infinite = (q <= p) ? semi_infinite_intensity(p, p - q, Direction::down, t)
                              : semi_infinite_intensity(p, q - p, Direction::up, t);
        r.abs_diff = std::abs(r.finite - r.infinite);
        cmp.max_abs_diff = std::max(cmp.max_abs_diff, r.abs_diff);
        if (q >= n - 10) cmp.edge_occupation += r.finite;
    }
    return cmp;
}

}  // namespace gflat
