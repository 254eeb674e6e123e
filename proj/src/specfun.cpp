#include "gflat/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace gflat {

ScaledValue ScaledValue::encode(double x) {
    ScaledValue s;
    s.mantissa = std::frexp(x, &s.exponent2);
    return s;
}

double ScaledValue::decode() const {
    return std::ldexp(mantissa, exponent2);
}

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: degree must be >= 0");
    if (n == 0) return 1.0;
    double hm = 1.0;       // H_{k-1}
    double h = 2.0 * x;    // H_k
    for (int k = 1; k < n; ++k) {
        double hp = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = hp;
    }
    return h;
}

std::vector<ScaledValue> hermite_orthonormal_seq(double lambda, int count) {
    if (count < 1) throw std::invalid_argument("hermite_orthonormal_seq: count must be >= 1");
    std::vector<ScaledValue> u(count);
    u[0] = ScaledValue{0.5, 1};  // exactly 1
    if (count == 1) return u;
    u[1] = ScaledValue::encode(lambda);
    for (int k = 1; k + 1 < count; ++k) {
        // Bring u_k and u_{k-1} to the common exponent before combining.
        // The shifted mantissas are <= 1 in magnitude and the multipliers
        // are O(sqrt(k) + |lambda|), so the double arithmetic cannot
        // overflow; frexp renormalizes exactly (powers of two).
        int e = std::max(u[k].exponent2, u[k - 1].exponent2);
        double a = std::ldexp(u[k].mantissa, u[k].exponent2 - e);
        double b = std::ldexp(u[k - 1].mantissa, u[k - 1].exponent2 - e);
        double t = (lambda * a - std::sqrt(double(k)) * b) / std::sqrt(double(k + 1));
        u[k + 1] = ScaledValue::encode(t);
        u[k + 1].exponent2 += e;
        if (t == 0.0) u[k + 1].exponent2 = 0;
    }
    return u;
}

double laguerre_eval(int n, int alpha, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_eval: degree must be >= 0");
    if (alpha < 0) throw std::invalid_argument("laguerre_eval: alpha must be >= 0");
    if (x < 0.0) throw std::invalid_argument("laguerre_eval: x must be >= 0");
    if (n == 0) return 1.0;
    double lm = 1.0;                  // L_{k-1}
    double l = 1.0 + alpha - x;       // L_k
    for (int k = 1; k < n; ++k) {
        double lp = ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm) / (k + 1.0);
        lm = l;
        l = lp;
    }
    return l;
}

}  // namespace gflat
