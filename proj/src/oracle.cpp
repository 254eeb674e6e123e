#include "gflat/oracle.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace gflat {

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int j = 0; j < n; ++j) m(j, j) = 1.0;
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.size != b.size) throw std::invalid_argument("max_abs_diff: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) d = std::max(d, std::abs(a.a[i] - b.a[i]));
    return d;
}

double unitarity_defect(const ComplexMatrix& u) {
    const int n = u.size;
    double defect = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            cdouble s = 0.0;
            for (int l = 0; l < n; ++l) s += std::conj(u(l, j)) * u(l, k);
            if (j == k) s -= 1.0;
            defect = std::max(defect, std::abs(s));
        }
    }
    return defect;
}

}  // namespace gflat

namespace gflat::oracle {

namespace {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.size;
    ComplexMatrix c(n);
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
            const cdouble w = a(j, l);
            if (w == cdouble{}) continue;
            for (int k = 0; k < n; ++k) c(j, k) += w * b(l, k);
        }
    }
    return c;
}

double inf_norm(const ComplexMatrix& a) {
    double best = 0.0;
    for (int j = 0; j < a.size; ++j) {
        double row = 0.0;
        for (int k = 0; k < a.size; ++k) row += std::abs(a(j, k));
        best = std::max(best, row);
    }
    return best;
}

}  // namespace

double spectral_radius_bound(const CouplingMatrix& m) {
    // Row j touches off_diagonal[j-1] and off_diagonal[j]; the diagonal is zero.
    double best = 0.0;
    for (int j = 0; j < m.size; ++j) {
        double row = 0.0;
        if (j > 0) row += m.off_diagonal[j - 1];
        if (j + 1 < m.size) row += m.off_diagonal[j];
        best = std::max(best, row);
    }
    return best;
}

ComplexMatrix dense_expm(const CouplingMatrix& m, double t) {
    if (m.size > kDenseCap)
        throw std::invalid_argument("dense_expm: size above oracle cap of 64");
    const int n = m.size;

    // A = -i M t, tridiagonal.
    ComplexMatrix a(n);
    for (int j = 0; j + 1 < n; ++j) {
        const cdouble w = cdouble(0.0, -t) * m.off_diagonal[j];
        a(j, j + 1) = w;
        a(j + 1, j) = w;
    }

    int squarings = 0;
    double norm = inf_norm(a);
    while (norm > 0.5) {
        norm *= 0.5;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& x : a.a) x *= scale;

    // Taylor series of exp(A) up to order 16; with ||A|| <= 0.5 the
    // truncation error is far below double rounding.
    constexpr int kOrder = 16;
    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= kOrder; ++k) {
        term = multiply(term, a);
        const double inv = 1.0 / k;
        for (auto& x : term.a) x *= inv;
        for (std::size_t i = 0; i < result.a.size(); ++i) result.a[i] += term.a[i];
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

int sturm_count(const CouplingMatrix& m, double x) {
    // Sequence d_i = -x - b_{i-1}^2 / d_{i-1}; the count of negative d_i
    // equals the count of eigenvalues strictly below x.  b_i^2 = i + 1
    // exactly.  A vanishing pivot is replaced by +pivmin (a zero pivot
    // means x hits an eigenvalue of a leading minor; treating it as
    // positive keeps the count strict), a merely tiny pivot keeps its
    // sign.
    double b2max = 1.0;
    if (m.size > 1) b2max = double(m.size - 1);
    const double pivmin = std::max(DBL_MIN, b2max * DBL_MIN);

    int count = 0;
    double d = 1.0;
    for (int i = 0; i < m.size; ++i) {
        double b2 = 0.0;
        if (i > 0) b2 = m.off_diagonal[i - 1] * m.off_diagonal[i - 1];
        d = -x - b2 / d;
        if (d == 0.0)
            d = pivmin;
        else if (std::abs(d) < pivmin)
            d = std::copysign(pivmin, d);
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> bisect_eigenvalues(const CouplingMatrix& m) {
    constexpr double kTol = 1e-12;
    const double radius = spectral_radius_bound(m) + 1.0;
    std::vector<double> lambdas(m.size);
    for (int k = 0; k < m.size; ++k) {
        double lo = -radius;
        double hi = radius;
        while (hi - lo > kTol) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count(m, mid) <= k)
                lo = mid;
            else
                hi = mid;
        }
        lambdas[k] = 0.5 * (lo + hi);
    }
    return lambdas;
}

}  // namespace gflat::oracle
