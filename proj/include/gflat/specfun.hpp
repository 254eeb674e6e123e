// Hermite and generalized Laguerre polynomial evaluation.
//
// Hermite polynomials follow the physicists' convention throughout:
//   H_0 = 1,  H_1 = 2x,  H_{n+1} = 2x H_n - 2n H_{n-1}.
// Do not mix with the probabilists' convention (He_n); every formula in
// this library assumes the physicists' normalization.

#pragma once

#include <vector>

namespace gflat {

// A real value stored as mantissa * 2^exponent2 with 0.5 <= |mantissa| < 1
// (or mantissa == 0).  Used wherever orthonormal Hermite components are
// carried to high degree: the raw values overflow double near degree 150
// at edge eigenvalues, the split representation does not.
struct ScaledValue {
    double mantissa = 0.0;
    int exponent2 = 0;

    static ScaledValue encode(double x);

    // May overflow to +-inf for large exponents; callers only decode
    // entries known to fit a double.
    double decode() const;
};

// H_n(x), physicists' convention.  Overflows to infinity for large n;
// intended for small degrees (tests, cross-checks).
double hermite_eval(int n, double x);

// Orthonormal Hermite sequence u_k = H_k(lambda/sqrt(2)) / sqrt(2^k k!)
// for k = 0..count-1, via the scaled recurrence
//   u_0 = 1,  u_1 = lambda u_0,  u_{k+1} = (lambda u_k - sqrt(k) u_{k-1}) / sqrt(k+1)
// with base-2 exponent tracking at every step.  Exact in structure and
// overflow-free for count <= 1e4 and |lambda| <= 2 sqrt(2 count).
std::vector<ScaledValue> hermite_orthonormal_seq(double lambda, int count);

// Generalized Laguerre polynomial L_n^{(alpha)}(x) by the standard
// three-term recurrence.  Well conditioned for the regime used here
// (n <= ~60, x <= ~100); no asymptotic branches.
double laguerre_eval(int n, int alpha, double x);

}  // namespace gflat
