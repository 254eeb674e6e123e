#pragma once

#include <complex>
#include <vector>

namespace gflat {

using cdouble = std::complex<double>;

// Dense row-major complex matrix, just enough for propagators and the
// brute-force validators.
struct ComplexMatrix {
    int size = 0;
    std::vector<cdouble> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : size(n), a(std::size_t(n) * n) {}

    cdouble& operator()(int j, int k) { return a[std::size_t(j) * size + k]; }
    const cdouble& operator()(int j, int k) const { return a[std::size_t(j) * size + k]; }

    static ComplexMatrix identity(int n);
};

// max_{j,k} |A_jk - B_jk|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// ||A^dagger A - I||_max
double unitarity_defect(const ComplexMatrix& u);

}  // namespace gflat
